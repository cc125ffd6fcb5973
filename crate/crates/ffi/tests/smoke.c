#include <stdio.h>
#include <string.h>
#include "leibniz.h"

#define CHECK(cond)                                              \
    do {                                                         \
        if (!(cond)) {                                           \
            fprintf(stderr, "check failed line %d: %s\n", __LINE__, #cond); \
            return 1;                                            \
        }                                                        \
    } while (0)

int main(void) {
    LzSieve *sieve = NULL;
    LzFunction *f = NULL;
    char *out = NULL;
    size_t pos = 0;
    uint64_t d = 0;

    CHECK(lz_sieve_new(10000, &sieve) == LZ_STATUS_OK);
    CHECK(lz_arithmetic_derivative(sieve, 8, &d) == LZ_STATUS_OK && d == 12);

    CHECK(lz_function_parse("conv(E, E)", &f, &pos) == LZ_STATUS_OK);
    CHECK(lz_function_eval(f, sieve, "12", &out) == LZ_STATUS_OK);
    CHECK(strcmp(out, "6") == 0);
    lz_string_free(out);
    lz_function_free(f);

    f = NULL;
    CHECK(lz_function_parse("conv(D N)", &f, &pos) == LZ_STATUS_PARSE_ERROR);
    CHECK(pos == 7 && f == NULL && lz_last_error() != NULL);

    CHECK(lz_verify("leibniz", "D", "E", NULL, NULL, 10, 0, sieve, &out) == LZ_STATUS_FAIL);
    CHECK(strcmp(out, "FAIL leibniz at (2,2): lhs=4 rhs=2") == 0);
    lz_string_free(out);

    lz_sieve_free(sieve);
    puts("ok");
    return 0;
}
