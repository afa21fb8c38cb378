#include "picod/instance.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <unordered_set>

namespace picod {

MsgSet PicodInstance::side_info(int i) const {
  if (i < 1 || i > n()) throw std::out_of_range("client index out of range: " + std::to_string(i));
  return clients[static_cast<size_t>(i - 1)];
}

MsgSet PicodInstance::request_mask(int i) const { return universe() & ~side_info(i); }

PicodInstance make_instance(int m, std::vector<MsgSet> clients) {
  if (m < 1) throw std::invalid_argument("message count must be at least 1");
  if (m > kMaxMessages) throw std::invalid_argument("at most " + std::to_string(kMaxMessages) + " messages supported");
  if (clients.empty()) throw std::invalid_argument("instance needs at least one client");
  const MsgSet full = full_set(m);
  std::unordered_set<MsgSet> seen;
  for (MsgSet s : clients) {
    if (s & ~full) throw std::invalid_argument("side-information set uses a message outside 1.." + std::to_string(m));
    if (s == full) throw std::invalid_argument("side-information set " + set_repr(s) + " equals the full message set");
    if (!seen.insert(s).second) throw std::invalid_argument("duplicate side-information set " + set_repr(s));
  }
  return PicodInstance{m, std::move(clients)};
}

RequestSet request_set(const PicodInstance& inst, int i) { return RequestSet{i, inst.request_mask(i)}; }

bool is_present(const PicodInstance& inst, MsgSet s) {
  if (s & ~inst.universe()) throw std::invalid_argument("set uses a message outside 1.." + std::to_string(inst.m));
  if (s == inst.universe()) throw std::invalid_argument("the full message set is neither present nor absent");
  return std::find(inst.clients.begin(), inst.clients.end(), s) != inst.clients.end();
}

int delta(const PicodInstance& inst) {
  int best = 0;
  for (int j = 1; j <= inst.m; ++j) {
    int count = 0;
    for (MsgSet s : inst.clients)
      if (!has_msg(s, j)) ++count;
    best = std::max(best, count);
  }
  return best;
}

PicodInstance complete_sigma(int m, const std::vector<int>& sigma) {
  if (m < 1 || m > kMaxMessages) throw std::invalid_argument("message count out of range");
  if (sigma.empty()) throw std::invalid_argument("sigma must be non-empty");
  std::set<int> sizes(sigma.begin(), sigma.end());
  for (int s : sizes)
    if (s < 0 || s >= m) throw std::invalid_argument("sigma entries must lie in 0.." + std::to_string(m - 1));
  std::uint64_t total = 0;
  for (int s : sizes) total += binomial(m, s);
  if (total > 4'000'000) throw BudgetExceeded("complete-sigma instance would have " + std::to_string(total) + " clients");

  std::vector<MsgSet> clients;
  clients.reserve(static_cast<size_t>(total));
  for (int s : sizes)
    for (MsgSet mask = 0; mask <= full_set(m); ++mask)
      if (set_size(mask) == s) clients.push_back(mask);
  std::sort(clients.begin(), clients.end(), canonical_set_less);
  return make_instance(m, std::move(clients));
}

PicodInstance partition_class_instance(int m, const std::vector<std::vector<MsgSet>>& levels) {
  if (m < 1 || m > kMaxMessages) throw std::invalid_argument("message count out of range");
  if (levels.empty()) throw std::invalid_argument("at least one partition level required");
  const MsgSet full = full_set(m);

  MsgSet ground = 0;
  for (size_t li = 0; li < levels.size(); ++li) {
    const auto& level = levels[li];
    if (level.empty()) throw std::invalid_argument("partition level " + std::to_string(li + 1) + " is empty");
    MsgSet seen = 0;
    for (MsgSet block : level) {
      if (block == 0) throw std::invalid_argument("partition blocks must be non-empty");
      if (block & ~full) throw std::invalid_argument("partition block uses a message outside 1.." + std::to_string(m));
      if (block & seen) throw std::invalid_argument("blocks of level " + std::to_string(li + 1) + " overlap");
      seen |= block;
    }
    if (li == 0) {
      ground = seen;
    } else if (seen != ground) {
      throw std::invalid_argument("level " + std::to_string(li + 1) + " does not partition the same ground set");
    }
  }
  for (size_t li = 0; li + 1 < levels.size(); ++li) {
    for (MsgSet child : levels[li + 1]) {
      bool inside = false;
      for (MsgSet parent : levels[li]) inside = inside || (child & ~parent) == 0;
      if (!inside)
        throw std::invalid_argument("level " + std::to_string(li + 2) + " does not refine level " + std::to_string(li + 1));
    }
    for (MsgSet parent : levels[li]) {
      int children = 0;
      for (MsgSet child : levels[li + 1])
        if ((child & ~parent) == 0) ++children;
      if (children < 2)
        throw std::invalid_argument("block " + set_repr(parent) + " is not split non-trivially at level " +
                                    std::to_string(li + 2));
    }
  }

  std::vector<MsgSet> clients;
  for (const auto& level : levels)
    for (MsgSet block : level) clients.push_back(full & ~block);
  std::sort(clients.begin(), clients.end(), canonical_set_less);
  return make_instance(m, std::move(clients));
}

PicodInstance random_instance(int m, int n, std::uint64_t seed) {
  if (m < 1 || m > kMaxMessages) throw std::invalid_argument("message count out of range");
  const std::uint64_t proper = full_set(m);  // 2^m - 1 proper subsets
  if (n < 1 || static_cast<std::uint64_t>(n) > proper)
    throw std::invalid_argument("cannot draw " + std::to_string(n) + " distinct proper subsets of a " +
                                std::to_string(m) + "-message universe");
  std::mt19937_64 rng(seed);
  std::set<MsgSet> picked;
  while (picked.size() < static_cast<size_t>(n)) {
    const MsgSet s = rng() & full_set(m);
    if (s == full_set(m)) continue;  // rejection keeps the draw uniform
    picked.insert(s);
  }
  std::vector<MsgSet> clients(picked.begin(), picked.end());
  std::sort(clients.begin(), clients.end(), canonical_set_less);
  return make_instance(m, std::move(clients));
}

std::optional<std::vector<int>> detect_complete_sigma(const PicodInstance& inst) {
  std::vector<std::uint64_t> count(static_cast<size_t>(inst.m), 0);
  for (MsgSet s : inst.clients) ++count[static_cast<size_t>(set_size(s))];
  std::vector<int> sigma;
  for (int s = 0; s < inst.m; ++s) {
    if (count[static_cast<size_t>(s)] == 0) continue;
    if (count[static_cast<size_t>(s)] != binomial(inst.m, s)) return std::nullopt;
    sigma.push_back(s);
  }
  return sigma;
}

PicodInstance builtin_instance(std::string_view name) {
  if (name == "example2") {
    return make_instance(4, {set_of({}), set_of({1, 2}), set_of({3}), set_of({1, 4}), set_of({1, 2, 3}),
                             set_of({1, 2, 4}), set_of({1, 3, 4}), set_of({2}), set_of({2, 4}), set_of({2, 3}),
                             set_of({1, 3})});
  }
  if (name == "lemma1-demo") return make_instance(4, {set_of({}), set_of({3, 4}), set_of({1, 2})});
  if (name == "singletons-3") return make_instance(3, {set_of({1}), set_of({2}), set_of({3})});
  throw std::invalid_argument("unknown builtin instance: " + std::string(name));
}

std::vector<std::string> builtin_names() { return {"example2", "lemma1-demo", "singletons-3"}; }

std::vector<MsgSet> proper_subsets_canonical(int m) {
  std::vector<MsgSet> out;
  out.reserve(static_cast<size_t>(full_set(m)));
  for (MsgSet s = 0; s < full_set(m); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), canonical_set_less);
  return out;
}

void for_each_instance(int m, int n, const std::function<void(const PicodInstance&)>& fn, std::uint64_t max_count) {
  const auto pool = proper_subsets_canonical(m);
  if (n < 1 || static_cast<size_t>(n) > pool.size()) return;
  if (binomial(static_cast<int>(pool.size()), n) > max_count)
    throw BudgetExceeded("instance enumeration too large for m=" + std::to_string(m) + ", n=" + std::to_string(n));

  std::vector<int> idx(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<size_t>(i)] = i;
  while (true) {
    std::vector<MsgSet> clients;
    clients.reserve(static_cast<size_t>(n));
    for (int i : idx) clients.push_back(pool[static_cast<size_t>(i)]);
    fn(PicodInstance{m, std::move(clients)});

    int k = n - 1;
    while (k >= 0 && idx[static_cast<size_t>(k)] == static_cast<int>(pool.size()) - n + k) --k;
    if (k < 0) break;
    ++idx[static_cast<size_t>(k)];
    for (int i = k + 1; i < n; ++i) idx[static_cast<size_t>(i)] = idx[static_cast<size_t>(i - 1)] + 1;
  }
}

}  // namespace picod
