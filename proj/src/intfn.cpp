#include "liaison/intfn.hpp"

#include <map>

namespace liaison {

IntFn::IntFn(std::vector<Entry> entries) {
  std::map<Deg, Val> acc;
  for (const auto& [l, v] : entries) acc[l] += v;
  entries_.reserve(acc.size());
  for (const auto& [l, v] : acc)
    if (v != 0) entries_.emplace_back(l, v);
}

IntFn IntFn::from_sorted(std::vector<Entry> entries) {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].second == 0)
      throw invalid_input("IntFn entry with zero value at degree " +
                          std::to_string(entries[i].first));
    if (i > 0 && entries[i - 1].first >= entries[i].first)
      throw invalid_input("IntFn entries must be strictly increasing in degree");
  }
  IntFn f;
  f.entries_ = std::move(entries);
  return f;
}

Val IntFn::at(Deg l) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), l,
                             [](const Entry& e, Deg d) { return e.first < d; });
  if (it != entries_.end() && it->first == l) return it->second;
  return 0;
}

Deg IntFn::min_support() const {
  if (entries_.empty()) throw invalid_input("min_support of the zero function");
  return entries_.front().first;
}

Deg IntFn::max_support() const {
  if (entries_.empty()) throw invalid_input("max_support of the zero function");
  return entries_.back().first;
}

Val IntFn::sum() const {
  Val s = 0;
  for (const auto& [l, v] : entries_) s += v;
  return s;
}

Val IntFn::weighted_sum() const {
  Val s = 0;
  for (const auto& [l, v] : entries_) s += l * v;
  return s;
}

bool IntFn::nonnegative() const {
  for (const auto& [l, v] : entries_)
    if (v < 0) return false;
  return true;
}

IntFn IntFn::plus(const IntFn& g) const {
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + g.entries_.size());
  auto a = entries_.begin();
  auto b = g.entries_.begin();
  while (a != entries_.end() || b != g.entries_.end()) {
    if (b == g.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(*a++);
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      Val v = a->second + b->second;
      if (v != 0) merged.emplace_back(a->first, v);
      ++a, ++b;
    }
  }
  IntFn out;
  out.entries_ = std::move(merged);
  return out;
}

IntFn IntFn::negated() const {
  IntFn out;
  out.entries_ = entries_;
  for (auto& [l, v] : out.entries_) v = -v;
  return out;
}

IntFn IntFn::minus(const IntFn& g) const { return plus(g.negated()); }

IntFn IntFn::shifted(Deg k) const {
  IntFn out;
  out.entries_ = entries_;
  for (auto& [l, v] : out.entries_) l += k;
  return out;
}

IntFn IntFn::indicator(Deg a, Deg b) {
  IntFn out;
  for (Deg l = a; l <= b; ++l) out.entries_.emplace_back(l, 1);
  return out;
}

IntFn diff(const IntFn& f, int m) {
  if (m < 0) throw invalid_input("difference order must be nonnegative");
  IntFn g = f;
  for (int i = 0; i < m; ++i) g = g.minus(g.shifted(1));
  return g;
}

Val sharp(const IntFn& f, Deg a) {
  Val s = 0;
  for (const auto& [l, v] : f.entries()) {
    if (l > a) break;
    s += v;
  }
  return s;
}

IntFn partial_sums(const IntFn& f) {
  if (f.sum() != 0)
    throw invalid_input("partial sums of a function with nonzero total are not finitely supported");
  if (f.is_zero()) return {};
  std::vector<IntFn::Entry> out;
  Val acc = 0;
  for (Deg l = f.min_support(); l <= f.max_support(); ++l) {
    acc += f.at(l);
    if (acc != 0) out.emplace_back(l, acc);
  }
  return IntFn(std::move(out));
}

PosBounds bounds(const IntFn& f) {
  PosBounds b;
  for (const auto& [l, v] : f.entries()) {
    if (v > 0) {
      if (!b.a) b.a = l;
      b.o = l;
    }
  }
  return b;
}

namespace {

void require_nonnegative(const IntFn& f) {
  if (!f.nonnegative())
    throw invalid_input("connectedness is defined for nonnegative functions only");
}

}  // namespace

bool connected_in_degrees(const IntFn& f, ConnMode mode, Deg bound) {
  require_nonnegative(f);
  PosBounds pb = bounds(f);
  switch (mode) {
    case ConnMode::geq:
    case ConnMode::gt: {
      // Positive somewhere above the bound forces positivity down to it.
      if (!pb.o || *pb.o <= bound) return true;
      Deg from = mode == ConnMode::geq ? bound : bound + 1;
      for (Deg l = from; l <= *pb.o; ++l)
        if (f.at(l) <= 0) return false;
      return true;
    }
    case ConnMode::leq:
    case ConnMode::lt: {
      if (!pb.a || *pb.a >= bound) return true;
      Deg to = mode == ConnMode::leq ? bound : bound - 1;
      for (Deg l = *pb.a; l <= to; ++l)
        if (f.at(l) <= 0) return false;
      return true;
    }
  }
  return false;
}

bool connected_about(const IntFn& f, Deg a, Deg b) {
  if (!connected_in_degrees(f, ConnMode::leq, b)) return false;
  if (!connected_in_degrees(f, ConnMode::geq, a)) return false;
  for (Deg l = a; l <= b; ++l)
    if (f.at(l) == 0) return false;
  return true;
}

bool connected(const IntFn& f) {
  require_nonnegative(f);
  PosBounds pb = bounds(f);
  if (!pb.a) return true;
  return connected_about(f, *pb.a, *pb.o);
}

TailFn::TailFn(IntFn window, Val tail, Deg tail_start)
    : window_(std::move(window)), tail_(tail), tail_start_(tail_start) {
  if (!window_.is_zero() && window_.max_support() >= tail_start_)
    throw invalid_input("TailFn window overlaps the constant tail");
  // Canonical form: least tail_start describing the same function.
  if (tail_ == 0) {
    tail_start_ = window_.is_zero() ? 0 : window_.max_support() + 1;
  } else {
    while (!window_.is_zero() && window_.max_support() == tail_start_ - 1 &&
           window_.entries().back().second == tail_) {
      auto entries = window_.entries();
      entries.pop_back();
      window_ = IntFn::from_sorted(std::move(entries));
      --tail_start_;
    }
  }
}

IntFn diff(const TailFn& f, int m) {
  if (m < 1)
    throw invalid_input("difference of an eventually-constant function needs order >= 1");
  // First difference is finitely supported: below the window it is 0, past
  // tail_start it is tail - tail = 0.
  Deg lo = f.window().is_zero() ? f.tail_start() : f.window().min_support();
  std::vector<IntFn::Entry> out;
  for (Deg l = lo; l <= f.tail_start(); ++l) {
    Val v = f.at(l) - f.at(l - 1);
    if (v != 0) out.emplace_back(l, v);
  }
  return diff(IntFn(std::move(out)), m - 1);
}

}  // namespace liaison
