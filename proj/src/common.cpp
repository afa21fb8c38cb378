#include "picod/common.hpp"

namespace picod {

std::vector<int> set_elements(MsgSet s) {
  std::vector<int> out;
  out.reserve(static_cast<size_t>(set_size(s)));
  while (s) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

MsgSet set_of(std::initializer_list<int> elems) {
  MsgSet s = 0;
  for (int e : elems) {
    if (e < 1 || e > kMaxMessages) throw std::invalid_argument("message index out of range: " + std::to_string(e));
    s |= msg_bit(e);
  }
  return s;
}

std::string set_repr(MsgSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : set_elements(s)) {
    if (!first) out += ",";
    out += std::to_string(e);
    first = false;
  }
  out += "}";
  return out;
}

bool canonical_set_less(MsgSet a, MsgSet b) {
  const int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  while (a && b) {
    const int la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (int i = 1; i <= k; ++i) {
    // exact division: the running product is always a binomial coefficient
    r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace picod
