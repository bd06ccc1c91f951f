#include "skein/bracket.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "skein/error.hpp"
#include "skein/result_cache.hpp"

namespace skein {

namespace {

bool nested_or_disjoint(const std::vector<int>& a, const std::vector<int>& b) {
  if (std::includes(a.begin(), a.end(), b.begin(), b.end())) return true;
  if (std::includes(b.begin(), b.end(), a.begin(), a.end())) return true;
  std::vector<int> both;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
  return both.empty();
}

std::vector<int> labels_of(std::uint64_t mask) {
  std::vector<int> out;
  for (int j = 0; j < 64; ++j)
    if (mask >> j & 1U) out.push_back(j + 1);
  return out;
}

}  // namespace

bool is_laminar(const std::vector<std::vector<int>>& curves) {
  for (std::size_t a = 0; a < curves.size(); ++a)
    for (std::size_t b = a + 1; b < curves.size(); ++b)
      if (!nested_or_disjoint(curves[a], curves[b])) return false;
  return true;
}

LaminarMulticurve LaminarMulticurve::from_curves(std::vector<std::vector<int>> curves) {
  for (auto& c : curves) {
    std::sort(c.begin(), c.end());
    if (c.empty()) throw SkeinError("basis curves must enclose at least one puncture");
    if (std::adjacent_find(c.begin(), c.end()) != c.end()) throw SkeinError("repeated puncture label in a curve");
  }
  if (!is_laminar(curves)) throw SkeinError("curve family is not laminar");
  std::sort(curves.begin(), curves.end());
  LaminarMulticurve m;
  m.curves = std::move(curves);
  return m;
}

LaminarMulticurve LaminarMulticurve::from_matching(std::vector<std::pair<int, int>> pairs) {
  for (auto& p : pairs)
    if (p.first > p.second) std::swap(p.first, p.second);
  std::sort(pairs.begin(), pairs.end());
  LaminarMulticurve m;
  m.matching = std::move(pairs);
  return m;
}

std::string LaminarMulticurve::to_string() const {
  std::ostringstream os;
  if (!matching.empty()) {
    os << '[';
    for (std::size_t k = 0; k < matching.size(); ++k)
      os << (k ? "," : "") << '[' << matching[k].first << ',' << matching[k].second << ']';
    os << ']';
    return os.str();
  }
  os << '{';
  for (std::size_t k = 0; k < curves.size(); ++k) {
    os << (k ? "," : "") << '{';
    for (std::size_t j = 0; j < curves[k].size(); ++j) os << (j ? "," : "") << curves[k][j];
    os << '}';
  }
  os << '}';
  return os.str();
}

LaminarClass laminar_class(const SlicedDiagram& d) {
  validate(d);
  if (d.crossing_count() > 0) throw SkeinError("laminar_class needs a crossingless diagram");
  const SlicedDiagram plain = d.unoriented();
  const DiagramTrace trace(plain);
  const auto table = winding_table(plain);
  LaminarClass out;
  std::vector<std::vector<int>> curves;
  std::vector<std::pair<int, int>> pairs;
  for (std::size_t c = 0; c < trace.components().size(); ++c) {
    const Component& comp = trace.components()[c];
    if (comp.kind == ComponentKind::open_strand) {
      pairs.emplace_back(comp.start_point, comp.end_point);
      continue;
    }
    std::vector<int> enclosed;
    for (std::size_t j = 0; j < table[c].size(); ++j) {
      const long w = table[c][j];
      if (w > 1 || w < -1) throw SkeinError("winding number " + std::to_string(w) + " on an embedded curve");
      if (w != 0) enclosed.push_back(static_cast<int>(j) + 1);
    }
    if (enclosed.empty()) ++out.trivial_loops;
    else curves.push_back(std::move(enclosed));
  }
  if (!pairs.empty()) out.curve = LaminarMulticurve::from_matching(std::move(pairs));
  else out.curve = LaminarMulticurve::from_curves(std::move(curves));
  return out;
}

// ---------------------------------------------------------------------------

void BracketElement::add(const LaminarMulticurve& key, const LaurentPoly& coeff) {
  ReducedScalar c(coeff, reduction_);
  if (c.is_zero()) return;
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ReducedScalar BracketElement::coefficient(const LaminarMulticurve& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? ReducedScalar(LaurentPoly(), reduction_) : it->second;
}

BracketElement BracketElement::scaled(const LaurentPoly& c) const {
  BracketElement out(reduction_);
  const ReducedScalar k(c, reduction_);
  for (const auto& [key, v] : terms_) out.add(key, (v * k).value());
  return out;
}

BracketElement BracketElement::projected(int m) const {
  BracketElement out(m);
  if (terms_.empty()) project_reduced(ReducedScalar(LaurentPoly(), reduction_), m);
  for (const auto& [key, v] : terms_) out.add(key, project_reduced(v, m).value());
  return out;
}

void BracketElement::check_same_ring(const BracketElement& rhs) const {
  if (reduction_ != rhs.reduction_)
    throw SkeinError("bracket elements live in different rings (R_" + std::to_string(reduction_) + " vs R_" +
                     std::to_string(rhs.reduction_) + ")");
}

BracketElement& BracketElement::operator+=(const BracketElement& rhs) {
  check_same_ring(rhs);
  for (const auto& [key, v] : rhs.terms_) add(key, v.value());
  return *this;
}

BracketElement& BracketElement::operator-=(const BracketElement& rhs) {
  check_same_ring(rhs);
  for (const auto& [key, v] : rhs.terms_) add(key, -v.value());
  return *this;
}

bool BracketElement::is_scalar() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_empty());
}

LaurentPoly BracketElement::scalar() const {
  if (!is_scalar()) throw SkeinError("bracket element is not a multiple of the empty class");
  return terms_.empty() ? LaurentPoly() : terms_.begin()->second.value();
}

std::string BracketElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, v] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + v.to_string() + ")*" + key.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Scanline resolution. Each state records, for the current row, where every
// strand end leads (another slot, or bottom endpoint k encoded as -(k+1)), the
// parity set of punctures lying under each open arc, the essential curves
// already closed off, and finished bottom-to-bottom arcs.

namespace {

struct ScanState {
  std::vector<int> partner;
  std::vector<std::uint64_t> mask;
  std::vector<std::uint64_t> curves;
  std::vector<std::pair<int, int>> pairs;

  friend auto operator<=>(const ScanState&, const ScanState&) = default;
  friend bool operator==(const ScanState&, const ScanState&) = default;
};

using Layer = std::map<ScanState, LaurentPoly>;

void accumulate(Layer& layer, ScanState&& s, const LaurentPoly& coeff) {
  if (coeff.is_zero()) return;
  auto [it, fresh] = layer.try_emplace(std::move(s), coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) layer.erase(it);
  }
}

void apply_cup(ScanState& s, int i) {
  for (int& p : s.partner)
    if (p >= i) p += 2;
  s.partner.insert(s.partner.begin() + i, {i + 1, i});
  s.mask.insert(s.mask.begin() + i, {0, 0});
}

// Returns true when a trivial loop was closed off.
bool apply_cap(ScanState& s, int i) {
  const int p = s.partner[i];
  const int q = s.partner[i + 1];
  bool trivial = false;
  if (p == i + 1) {
    if (s.mask[i] == 0) {
      trivial = true;
    } else {
      s.curves.insert(std::upper_bound(s.curves.begin(), s.curves.end(), s.mask[i]), s.mask[i]);
    }
  } else {
    const std::uint64_t joined = s.mask[i] ^ s.mask[i + 1];
    if (p >= 0) {
      s.partner[p] = q;
      s.mask[p] = joined;
    }
    if (q >= 0) {
      s.partner[q] = p;
      s.mask[q] = joined;
    }
    if (p < 0 && q < 0) {
      const std::pair<int, int> pr{std::min(-p - 1, -q - 1), std::max(-p - 1, -q - 1)};
      s.pairs.insert(std::upper_bound(s.pairs.begin(), s.pairs.end(), pr), pr);
    }
  }
  s.partner.erase(s.partner.begin() + i, s.partner.begin() + i + 2);
  s.mask.erase(s.mask.begin() + i, s.mask.begin() + i + 2);
  for (int& x : s.partner)
    if (x > i + 1) x -= 2;
  return trivial;
}

void apply_punctures(ScanState& s, const std::vector<int>& gaps, int first_label) {
  for (std::size_t k = 0; k < gaps.size(); ++k) {
    const std::uint64_t bit = std::uint64_t{1} << (first_label + static_cast<int>(k));
    const int gap = gaps[k];
    for (int a = 0; a < static_cast<int>(s.partner.size()); ++a) {
      const int b = s.partner[a];
      if (b > a && a < gap && gap <= b) {
        s.mask[a] ^= bit;
        s.mask[b] ^= bit;
      }
    }
  }
}

BracketElement scan_resolve(const SlicedDiagram& d) {
  validate(d);
  const int g = d.puncture_count();
  if (g > 64) throw SkeinError("at most 64 punctures are supported");
  const LaurentPoly delta = LaurentPoly::delta();
  const LaurentPoly a_pos = LaurentPoly::var(1);
  const LaurentPoly a_neg = LaurentPoly::var(-1);

  Layer layer;
  {
    ScanState init;
    for (int k = 0; k < d.bottom; ++k) init.partner.push_back(-(k + 1));
    init.mask.assign(d.bottom, 0);
    layer.emplace(std::move(init), LaurentPoly(1));
  }
  int labels_seen = 0;
  for (const Event& e : d.events) {
    Layer next;
    for (auto& [state, coeff] : layer) {
      switch (e.kind) {
        case EventKind::cup: {
          ScanState s = state;
          apply_cup(s, e.pos);
          accumulate(next, std::move(s), coeff);
          break;
        }
        case EventKind::cap: {
          ScanState s = state;
          const bool trivial = apply_cap(s, e.pos);
          accumulate(next, std::move(s), trivial ? coeff * delta : coeff);
          break;
        }
        case EventKind::cross: {
          // over = left: the A-smoothing keeps both strands vertical.
          const bool left = e.over == Over::left;
          accumulate(next, ScanState(state), coeff * (left ? a_pos : a_neg));
          ScanState s = state;
          const bool trivial = apply_cap(s, e.pos);
          apply_cup(s, e.pos);
          LaurentPoly c = coeff * (left ? a_neg : a_pos);
          if (trivial) c *= delta;
          accumulate(next, std::move(s), c);
          break;
        }
        case EventKind::punctures: {
          ScanState s = state;
          apply_punctures(s, e.gaps, labels_seen);
          accumulate(next, std::move(s), coeff);
          break;
        }
      }
    }
    if (e.kind == EventKind::punctures) labels_seen += static_cast<int>(e.gaps.size());
    layer = std::move(next);
  }

  BracketElement out(0);
  const int b = d.bottom;
  for (const auto& [state, coeff] : layer) {
    LaminarMulticurve key;
    if (d.closed()) {
      std::vector<std::vector<int>> curves;
      for (std::uint64_t m : state.curves) curves.push_back(labels_of(m));
      key = LaminarMulticurve::from_curves(std::move(curves));
    } else {
      std::vector<std::pair<int, int>> pairs = state.pairs;
      for (int s = 0; s < static_cast<int>(state.partner.size()); ++s) {
        const int p = state.partner[s];
        if (p < 0) pairs.emplace_back(-p - 1, b + s);
        else if (p > s) pairs.emplace_back(b + s, b + p);
      }
      key = LaminarMulticurve::from_matching(std::move(pairs));
    }
    out.add(key, coeff);
  }
  return out;
}

ResultCache<BracketElement>& bracket_cache() {
  static ResultCache<BracketElement> cache(cache_capacity_from_env());
  return cache;
}

BracketElement finish(const BracketElement& internal, const SlicedDiagram& d, int reduction, Normalization norm) {
  if (reduction < 0) throw SkeinError("reduction index must be nonnegative");
  BracketElement out(reduction);
  if (norm == Normalization::internal) {
    for (const auto& [key, v] : internal.terms()) out.add(key, v.value());
    return out;
  }
  if (!d.closed()) throw SkeinError("classical normalization applies to closed diagrams only");
  const bool empty = std::none_of(d.events.begin(), d.events.end(),
                                  [](const Event& e) { return e.kind == EventKind::cup; });
  if (empty) throw SkeinError("classical normalization is undefined on the empty diagram");
  const LaurentPoly delta = LaurentPoly::delta();
  for (const auto& [key, v] : internal.terms()) {
    auto q = v.value().divide_exact(delta);
    if (!q) throw SkeinError("classical normalization: coefficient of " + key.to_string() + " is not divisible by delta");
    out.add(key, *q);
  }
  return out;
}

}  // namespace

BracketElement bracket_resolve_uncached(const SlicedDiagram& d, int reduction, Normalization norm) {
  return finish(scan_resolve(d), d, reduction, norm);
}

BracketElement bracket_resolve(const SlicedDiagram& d, int reduction, Normalization norm) {
  const std::string key = diagram_key(d.unoriented());
  auto& cache = bracket_cache();
  std::optional<BracketElement> hit = cache.get(key);
  if (!hit) {
    hit = scan_resolve(d);
    cache.put(key, *hit);
  }
  return finish(*hit, d, reduction, norm);
}

void set_bracket_cache_capacity(std::size_t entries) { bracket_cache().set_capacity(entries); }

BracketElement state_sum_oracle(const SlicedDiagram& d) {
  validate(d);
  std::vector<int> crossings;
  for (int i = 0; i < static_cast<int>(d.events.size()); ++i)
    if (d.events[i].kind == EventKind::cross) crossings.push_back(i);
  const int c = static_cast<int>(crossings.size());
  if (c > 24) throw SkeinError("state_sum_oracle supports at most 24 crossings, got " + std::to_string(c));

  const LaurentPoly delta = LaurentPoly::delta();
  BracketElement out(0);
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    SlicedDiagram smoothed;
    smoothed.bottom = d.bottom;
    smoothed.top = d.top;
    int k = 0;
    int cc_count = 0;
    for (const Event& e : d.events) {
      if (e.kind != EventKind::cross) {
        smoothed.events.push_back(e);
        continue;
      }
      const bool cc = (state >> k++ & 1U) == 0;
      cc_count += cc ? 1 : 0;
      const bool vertical = (e.over == Over::left) == cc;
      if (!vertical) {
        smoothed.events.push_back(Event::cap(e.pos));
        smoothed.events.push_back(Event::cup(e.pos));
      }
    }
    const LaminarClass cls = laminar_class(smoothed);
    LaurentPoly coeff = LaurentPoly::var(cc_count - (c - cc_count));
    for (int t = 0; t < cls.trivial_loops; ++t) coeff *= delta;
    out.add(cls.curve, coeff);
  }
  return out;
}

BracketElement juxtapose(const BracketElement& a, int genus_a, const BracketElement& b) {
  if (a.reduction() != b.reduction()) throw SkeinError("juxtapose: elements live in different rings");
  BracketElement out(a.reduction());
  for (const auto& [ka, va] : a.terms()) {
    for (const auto& [kb, vb] : b.terms()) {
      if (!ka.matching.empty() || !kb.matching.empty()) throw SkeinError("juxtapose applies to closed-case elements");
      std::vector<std::vector<int>> curves = ka.curves;
      for (auto c : kb.curves) {
        for (int& j : c) j += genus_a;
        curves.push_back(std::move(c));
      }
      out.add(LaminarMulticurve::from_curves(std::move(curves)), (va * vb).value());
    }
  }
  return out;
}

std::vector<LaminarMulticurve> laminar_basis(int genus, int max_curves) {
  if (genus < 0 || genus > 6) throw SkeinError("laminar_basis supports genus 0..6");
  std::vector<std::vector<int>> subsets;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << genus); ++m) subsets.push_back(labels_of(m));
  std::vector<LaminarMulticurve> out;
  std::vector<int> pick;
  // Multisets as nondecreasing index sequences into `subsets`.
  auto recurse = [&](auto&& self, std::size_t from) -> void {
    std::vector<std::vector<int>> curves;
    for (int p : pick) curves.push_back(subsets[p]);
    if (!is_laminar(curves)) return;
    out.push_back(LaminarMulticurve::from_curves(std::move(curves)));
    if (static_cast<int>(pick.size()) == max_curves) return;
    for (std::size_t s = from; s < subsets.size(); ++s) {
      pick.push_back(static_cast<int>(s));
      self(self, s);
      pick.pop_back();
    }
  };
  recurse(recurse, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace skein
