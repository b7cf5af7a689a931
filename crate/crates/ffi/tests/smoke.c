#include "affcat.h"
#include <stdio.h>
#include <string.h>

int main(void) {
    AffcatPerm *p = NULL;
    if (affcat_perm_from_word(3, "t1", &p) != AFFCAT_STATUS_OK) return 1;
    int64_t w[3];
    size_t len = 0;
    if (affcat_perm_window(p, w, 3, &len) != AFFCAT_STATUS_OK || len != 3) return 2;
    if (affcat_perm_length(p) != 2 || affcat_perm_rho_power(p) != 1) return 3;
    AffcatHecke *a = NULL, *b = NULL, *c = NULL;
    if (affcat_hecke_parse(3, "b[1]", &a) != AFFCAT_STATUS_OK) return 4;
    if (affcat_hecke_parse(3, "(q + q^-1)*b[1]", &b) != AFFCAT_STATUS_OK) return 5;
    if (affcat_hecke_mul(a, a, &c) != AFFCAT_STATUS_OK) return 6;
    bool eq = false;
    affcat_hecke_equal(b, c, &eq);
    if (!eq) return 7;
    AffcatHecke *bad = NULL;
    if (affcat_hecke_parse(3, "T[s9]", &bad) != AFFCAT_STATUS_PARSE) return 8;
    if (affcat_last_error_message() == NULL) return 9;
    char *s = affcat_hecke_to_string(c);
    printf("%s\n", s);
    affcat_string_free(s);
    affcat_hecke_free(a);
    affcat_hecke_free(b);
    affcat_hecke_free(c);
    affcat_perm_free(p);
    return 0;
}
