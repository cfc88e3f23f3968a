#include <stdio.h>
#include <string.h>
#include "genexp.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (line %d)\n", #cond, __LINE__); return 1; } } while (0)

int main(void) {
    GenexpPoly *p = NULL;
    CHECK(genexp_c_poly("1,1", 3, &p) == GENEXP_STATUS_OK);
    CHECK(genexp_poly_num_terms(p) == 2);
    CHECK(genexp_poly_coeff(p, 2) == 1 && genexp_poly_coeff(p, 4) == 1);
    uint32_t e;
    int64_t c;
    CHECK(genexp_poly_term(p, 1, &e, &c) == GENEXP_STATUS_OK && e == 4 && c == 1);
    CHECK(genexp_poly_term(p, 2, &e, &c) == GENEXP_STATUS_OUT_OF_RANGE);
    char *s = genexp_poly_to_string(p);
    CHECK(strcmp(s, "t^2 + t^4") == 0);
    genexp_string_free(s);
    genexp_poly_free(p);

    CHECK(genexp_stable_c("1,1", 8, &p) == GENEXP_STATUS_OK);
    CHECK(genexp_poly_cutoff(p) == 8 && genexp_poly_eval_one(p) == 4);
    genexp_poly_free(p);

    uint32_t lo;
    CHECK(genexp_min_power("7,6,5,3,1", 5, &lo) == GENEXP_STATUS_OK && lo == 13);
    uint64_t count;
    CHECK(genexp_branching("2,1,1", "5,4,3,3,3,2", 3, &count) == GENEXP_STATUS_OK && count == 1);

    CHECK(genexp_c_poly("1,1,1", 2, &p) == GENEXP_STATUS_INCOMPATIBLE);
    CHECK(genexp_last_error() != NULL);
    CHECK(genexp_c_poly("x", 2, &p) == GENEXP_STATUS_MALFORMED_INPUT);
    printf("ok %s\n", genexp_version());
    return 0;
}
