/* The public header must compile as C. */
#include <stdio.h>

#include "occ/occ.h"

int main(void) {
  int holds = 0;
  if (occ_check_constants(1e-12, 1.0946, 0.0555, &holds) != OCC_OK || !holds) {
    fprintf(stderr, "%s\n", occ_last_error());
    return 1;
  }
  printf("%s\n", occ_status_name(OCC_OK));
  return 0;
}
