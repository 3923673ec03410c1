#include <stdio.h>
#include <string.h>
#include "dtry.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "line %d: %s\n", __LINE__, #cond); return 1; } } while (0)

int main(void) {
    DtryDirectory *d = NULL;
    CHECK(dtry_parse_flat("oscillator.mass.momentum = 0.0\nthermal_capacity.entropy = 16.56\n", &d) == DTRY_STATUS_OK);
    CHECK(dtry_leaf_count(d) == 2);

    char *v = NULL;
    CHECK(dtry_get(d, "oscillator.mass.momentum", &v) == DTRY_STATUS_OK);
    CHECK(strcmp(v, "0.0") == 0);
    dtry_string_free(v);
    CHECK(dtry_get(d, "oscillator", &v) == DTRY_STATUS_NOT_A_LEAF);
    CHECK(dtry_get(d, "nope", &v) == DTRY_STATUS_NOT_FOUND);

    CHECK(dtry_insert(d, "oscillator.mass", "1") == DTRY_STATUS_PREFIX_CONFLICT);
    CHECK(strcmp(dtry_status_name(DTRY_STATUS_PREFIX_CONFLICT), "E_PREFIX_CONFLICT") == 0);
    CHECK(dtry_last_error() != NULL);
    CHECK(dtry_insert(d, "oscillator.spring.displacement", "1.0") == DTRY_STATUS_OK);

    char *flat = dtry_emit_flat(d);
    CHECK(strcmp(flat, "oscillator.mass.momentum = 0.0\noscillator.spring.displacement = 1.0\nthermal_capacity.entropy = 16.56\n") == 0);
    dtry_string_free(flat);

    DtryDirectory *bad = NULL;
    CHECK(dtry_parse_flat("a = 1\na.b = 2\n", &bad) == DTRY_STATUS_PREFIX_CONFLICT);
    CHECK(bad == NULL);

    const char *names[] = {"s1", "s2"};
    const DtryDirectory *parts[] = {d, d};
    DtryDirectory *merged = NULL;
    CHECK(dtry_merge(names, parts, 2, &merged) == DTRY_STATUS_OK);
    CHECK(dtry_leaf_count(merged) == 6);

    dtry_free(merged);
    dtry_free(d);
    puts("ok");
    return 0;
}
