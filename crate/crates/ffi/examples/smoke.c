#include <stdio.h>
#include <stdlib.h>

#include "symreg.h"

static int fail(const char *what) {
  fprintf(stderr, "%s: %s\n", what, symreg_last_error());
  return 1;
}

int main(void) {
  const uint32_t edges[] = {1, 2, 1, 3, 1, 4, 1, 5};
  SymregGraph *g = NULL;
  if (symreg_graph_from_edges(5, edges, 4, &g) != SYMREG_STATUS_OK) return fail("graph");

  SymregIdeal *base = NULL, *square = NULL;
  if (symreg_edge_ideal(g, &base) != SYMREG_STATUS_OK) return fail("edge ideal");
  if (symreg_ideal_power(base, 2, &square) != SYMREG_STATUS_OK) return fail("power");

  uint32_t reg = 0;
  if (symreg_reg_takayama(square, 32003, &reg) != SYMREG_STATUS_OK) return fail("reg");

  char *g6 = NULL;
  if (symreg_graph_canonical_graph6(g, &g6) != SYMREG_STATUS_OK) return fail("graph6");
  printf("%s %zu %u\n", g6, symreg_ideal_generator_count(square), reg);

  if (symreg_reg_takayama(NULL, 32003, &reg) != SYMREG_STATUS_NULL_POINTER) return 1;

  symreg_string_free(g6);
  symreg_ideal_free(square);
  symreg_ideal_free(base);
  symreg_graph_free(g);
  return 0;
}
