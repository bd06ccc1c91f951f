#include "skein/jones.hpp"

#include "skein/error.hpp"
#include "skein/result_cache.hpp"

namespace skein {

namespace {

void require_link(const SlicedDiagram& d) {
  if (!d.oriented()) throw SkeinError("jones_polynomial needs an oriented diagram");
  if (!d.closed()) throw SkeinError("jones_polynomial needs a closed diagram (open strands present)");
  if (d.puncture_count() != 0) throw SkeinError("jones_polynomial is only implemented for g = 0");
  validate(d);
  if (DiagramTrace(d).components().empty()) throw SkeinError("jones_polynomial of the empty diagram is undefined");
}

ResultCache<JonesPoly>& jones_cache() {
  static ResultCache<JonesPoly> cache(cache_capacity_from_env());
  return cache;
}

LaurentPoly s_pow(int k) { return LaurentPoly::var(k); }

JonesPoly unlink_value(std::size_t components) {
  LaurentPoly v(1);
  const LaurentPoly loop = -s_pow(1) - s_pow(-1);
  for (std::size_t k = 1; k < components; ++k) v *= loop;
  return JonesPoly(v);
}

JonesPoly recurse(const SlicedDiagram& d, SwitchPolicy policy, ResultCache<JonesPoly>* cache, MeasureLog* log) {
  std::string key;
  if (cache != nullptr) {
    key = diagram_key(d) + (policy == SwitchPolicy::first_offending ? "#f" : "#l");
    if (auto hit = cache->get(key)) return *hit;
  }
  const std::vector<int> offending = non_descending_crossings(d);
  if (log != nullptr) log->emplace_back(d.crossing_count(), static_cast<int>(offending.size()));
  JonesPoly result;
  if (offending.empty()) {
    result = unlink_value(DiagramTrace(d).components().size());
  } else {
    const int e = policy == SwitchPolicy::first_offending ? offending.front() : offending.back();
    const SkeinTriple t = skein_triple(d, e);
    if (crossing_sign(d, e) > 0) {
      // t^-1 V+ - t V- = (t^1/2 - t^-1/2) V0, solved for V+.
      result = JonesPoly(s_pow(4)) * recurse(t.minus, policy, cache, log) +
               JonesPoly(s_pow(3) - s_pow(1)) * recurse(t.zero, policy, cache, log);
    } else {
      result = JonesPoly(s_pow(-4)) * recurse(t.plus, policy, cache, log) -
               JonesPoly(s_pow(-1) - s_pow(-3)) * recurse(t.zero, policy, cache, log);
    }
  }
  if (cache != nullptr) cache->put(key, result);
  return result;
}

std::vector<int> signature_of(const SlicedDiagram& d) {
  std::vector<int> sig{d.bottom, d.top, d.puncture_count()};
  const auto [bottom, top] = endpoint_directions(d);
  sig.insert(sig.end(), bottom.begin(), bottom.end());
  sig.insert(sig.end(), top.begin(), top.end());
  return sig;
}

}  // namespace

std::vector<int> non_descending_crossings(const SlicedDiagram& d) {
  const DiagramTrace trace(d);
  std::vector<int> seen(d.events.size(), 0);
  std::vector<int> out;
  for (const Component& c : trace.components()) {
    const int n = static_cast<int>(c.nodes.size());
    const int steps = static_cast<int>(c.via.size());
    const bool forward = trace.direction(c.nodes.front()) == trace.canonical_direction(c.nodes.front());
    for (int k = 0; k < steps; ++k) {
      // Reverse traversal walks the canonical steps backwards.
      const int idx = forward ? k : steps - 1 - k;
      const int e = c.via[idx];
      if (e < 0 || d.events[e].kind != EventKind::cross) continue;
      const NodeRef a = c.nodes[idx];
      const NodeRef b = c.nodes[(idx + 1) % n];
      const NodeRef lower = a.level < b.level ? a : b;
      const Event& ev = d.events[e];
      if (a.level == b.level || (lower.slot != ev.pos && lower.slot != ev.pos + 1)) continue;
      if (seen[e]++) continue;
      const bool left_strand = lower.slot == ev.pos;
      const bool over = left_strand == (ev.over == Over::left);
      if (!over) out.push_back(e);
    }
  }
  return out;
}

JonesPoly jones_polynomial_uncached(const SlicedDiagram& d, SwitchPolicy policy, MeasureLog* log) {
  require_link(d);
  return recurse(d, policy, nullptr, log);
}

JonesPoly jones_polynomial(const SlicedDiagram& d, SwitchPolicy policy) {
  require_link(d);
  return recurse(d, policy, &jones_cache(), nullptr);
}

void set_jones_cache_capacity(std::size_t entries) { jones_cache().set_capacity(entries); }

LaurentPoly jones_in_a(const SlicedDiagram& d) { return jones_to_laurent(jones_polynomial(d)); }

bool framing_insensitivity_check(const SlicedDiagram& d, std::optional<Location> loc) {
  require_link(d);
  const Location where = loc.value_or(first_strand_location(d));
  const JonesPoly base = jones_polynomial(d);
  for (int sign : {1, -1})
    if (jones_polynomial(add_kink(d, where, sign)) != base) return false;
  return true;
}

FormalTangleSum FormalTangleSum::of(const SlicedDiagram& d, const LaurentPoly& coeff) {
  FormalTangleSum s;
  s.add(d, coeff);
  return s;
}

void FormalTangleSum::add(const SlicedDiagram& d, const LaurentPoly& coeff) {
  if (!d.oriented()) throw SkeinError("formal tangle sums hold oriented diagrams");
  validate(d);
  if (!terms_.empty() && signature_of(terms_.begin()->first) != signature_of(d))
    throw SkeinError("formal tangle sum terms must share arities, punctures and boundary orientation");
  if (coeff.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(d, coeff);
  if (!fresh) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormalTangleSum& FormalTangleSum::operator+=(const FormalTangleSum& rhs) {
  for (const auto& [d, c] : rhs.terms_) add(d, c);
  return *this;
}

FormalTangleSum& FormalTangleSum::operator-=(const FormalTangleSum& rhs) {
  for (const auto& [d, c] : rhs.terms_) add(d, -c);
  return *this;
}

FormalTangleSum FormalTangleSum::scaled(const LaurentPoly& c) const {
  FormalTangleSum out;
  for (const auto& [d, v] : terms_) out.add(d, v * c);
  return out;
}

FormalTangleSum jones_relation_element(const SkeinTriple& t) {
  FormalTangleSum s;
  s.add(t.plus, LaurentPoly::var(4));
  s.add(t.minus, -LaurentPoly::var(-4));
  s.add(t.zero, LaurentPoly::var(2) - LaurentPoly::var(-2));
  return s;
}

}  // namespace skein
