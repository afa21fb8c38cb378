#pragma once

#include <optional>

#include "picod/bounds.hpp"
#include "picod/schemes.hpp"

namespace picod {

// Closed-form classification of instances with at most three clients.
enum class SmallCase {
  TwoOrFewer,  // n <= 2: all parameters 1
  Case1,       // n = 3, union of side information misses a message: all 1
  Case2a,      // n = 3, mixed demand pattern: all 1
  Case2b,      // n = 3, pairwise-intersection pattern: all 1
  Case4,       // n = 3, a length-2 nested collection exists: all 2
  Case5,       // n = 3, residual: beta = tau2 = 2, tau1 = eta = 1
};

const char* small_case_name(SmallCase);  // "n<=2", "3-1", "3-2a", "3-2b", "3-4", "3-5"

struct SmallCaseResult {
  SmallCase label = SmallCase::TwoOrFewer;
  int beta = 1, tau2 = 1, tau1 = 1, eta = 1;
  std::optional<LinearScheme> scheme;          // achievability witness
  std::optional<NestedCollection> collection;  // length-2 witness (case 3-4)
};

// Evaluates the case conditions in order; throws std::invalid_argument when
// n > 3.
SmallCaseResult characterize_small(const PicodInstance&);

struct CrosscheckEntry {
  PicodInstance instance;
  SmallCaseResult predicted;
  int eta = 0, tau1 = 0, tau2 = 0, beta2 = 0, beta3 = 0;
  bool match = false;
};

struct CrosscheckReport {
  int instances_checked = 0;
  int mismatches = 0;
  std::vector<CrosscheckEntry> entries;
};

// Sweeps every instance with m <= m_max, n <= 3 and compares the closed-form
// values against the exact nesting number, the decoding-chain DPs, and the
// exhaustive linear optimum over F_2 and F_3.
CrosscheckReport crosscheck_small(int m_max, const Budgets& = {});

}  // namespace picod
