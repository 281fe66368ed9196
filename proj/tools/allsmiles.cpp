// Copyright 2026 allsmiles authors
// SPDX-License-Identifier: Apache-2.0
#include <cstdio>

int main() {
  std::puts("allsmiles: command-line surface under construction");
  return 1;
}
