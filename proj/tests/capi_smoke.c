/* The public header must compile as C. */
#include <stdio.h>
#include <string.h>

#include <prodmake/prodmake.h>

int main(void)
{
    pm_seq *series = NULL;
    pm_seq *exps = NULL;
    int rc = 1;
    if (pm_series_from_expr("1/(1-q-q^2)", 10, &series) != PM_OK) {
        fprintf(stderr, "%s\n", pm_last_error_message());
        return 1;
    }
    if (pm_prodmake(series, PM_METHOD_BOTH, 0, &exps) == PM_OK && pm_seq_length(exps) == 10
        && strcmp(pm_seq_term(exps, 9), "11") == 0) {
        rc = 0;
    }
    pm_seq_free(exps);
    pm_seq_free(series);
    return rc;
}
