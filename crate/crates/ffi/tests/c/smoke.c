#include <stdio.h>
#include <string.h>

#include "eppo.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, eppo_last_error_message());
    return 1;
}

int main(void) {
    EppoGroup *g = NULL;
    if (eppo_group_from_source("catalog:PSL2(7)", &g) != EPPO_STATUS_OK) return fail("load");
    uint64_t order = 0;
    if (eppo_group_order(g, &order) != EPPO_STATUS_OK || order != 168) return fail("order");
    EppoVerdict verdict;
    uint64_t witness = 0;
    if (eppo_is_eppo(g, 0, 0, 0, &verdict, &witness) != EPPO_STATUS_OK || verdict != EPPO_VERDICT_EPPO) return fail("verdict");
    uint64_t orders[8];
    uintptr_t len = 0;
    if (eppo_spectrum(g, 0, orders, 8, &len) != EPPO_STATUS_OK || len != 5 || orders[4] != 7) return fail("spectrum");
    char *report = NULL;
    if (eppo_classify(g, 0, 0, 0, &report) != EPPO_STATUS_OK) return fail("classify");
    int simple = strstr(report, "classification.verdict: simple-eppo") != NULL;
    eppo_string_free(report);
    eppo_group_free(g);
    if (!simple) return fail("report");
    if (eppo_group_from_source("catalog:nothing", &g) != EPPO_STATUS_INVALID_SOURCE) return fail("bad source");
    printf("ok %llu\n", (unsigned long long)order);
    return 0;
}
