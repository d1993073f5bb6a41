/* The public header must stay consumable from plain C. */
#include <stdio.h>
#include <string.h>

#include "erdosl.h"

int main(void) {
  if (strcmp(erdosl_version(), "0.1.0") != 0) return 1;

  erdosl_ctx* ctx = NULL;
  if (erdosl_ctx_new(128, &ctx) != ERDOSL_OK) return 1;

  char* count = NULL;
  if (erdosl_enum_count(7, ERDOSL_PARITY_ALL, &count) != ERDOSL_OK) return 1;
  int ok = strcmp(count, "20") == 0;
  erdosl_free_string(count);

  erdosl_fn* f = NULL;
  if (erdosl_fn_parse("+-0", &f) != ERDOSL_OK) return 1;
  erdosl_real* v = NULL;
  if (erdosl_l_value(f, 1, ERDOSL_METHOD_DIGAMMA, ctx, &v) != ERDOSL_OK) return 1;
  ok = ok && erdosl_real_certified_sign(v) == 1;

  erdosl_real_free(v);
  erdosl_fn_free(f);
  erdosl_ctx_free(ctx);
  if (!ok) {
    fprintf(stderr, "C smoke checks failed\n");
    return 1;
  }
  printf("C linkage ok\n");
  return 0;
}
