#include "skein/diagram.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "skein/error.hpp"

namespace skein {

namespace {

void check_slots(const SlicedDiagram& d) {
  if (d.bottom < 0 || d.top < 0) throw ValidationError(ValidationRule::arity_mismatch, -1, "negative arity");
  int n = d.bottom;
  for (int idx = 0; idx < static_cast<int>(d.events.size()); ++idx) {
    const Event& e = d.events[idx];
    switch (e.kind) {
      case EventKind::cup:
        if (e.pos < 0)
          throw ValidationError(ValidationRule::slot_underflow, idx, "cup at negative slot " + std::to_string(e.pos));
        if (e.pos > n)
          throw ValidationError(ValidationRule::slot_overflow, idx,
                                "cup at slot " + std::to_string(e.pos) + " of a " + std::to_string(n) + "-strand row");
        n += 2;
        break;
      case EventKind::cap:
      case EventKind::cross: {
        const char* what = e.kind == EventKind::cap ? "cap" : "cross";
        if (n < 2 || e.pos < 0)
          throw ValidationError(ValidationRule::slot_underflow, idx,
                                std::string(what) + " at slot " + std::to_string(e.pos) + " of a " +
                                    std::to_string(n) + "-strand row");
        if (e.pos + 1 >= n)
          throw ValidationError(ValidationRule::slot_overflow, idx,
                                std::string(what) + " at slot " + std::to_string(e.pos) + " of a " +
                                    std::to_string(n) + "-strand row");
        if (e.kind == EventKind::cap) n -= 2;
        break;
      }
      case EventKind::punctures: {
        if (e.gaps.empty()) throw ValidationError(ValidationRule::bad_gaps, idx, "empty puncture row");
        int prev = 0;
        for (int g : e.gaps) {
          if (g < 0 || g > n)
            throw ValidationError(ValidationRule::bad_gaps, idx,
                                  "gap " + std::to_string(g) + " outside 0.." + std::to_string(n));
          if (g < prev) throw ValidationError(ValidationRule::bad_gaps, idx, "gaps must be nondecreasing");
          prev = g;
        }
        break;
      }
    }
  }
  if (n != d.top)
    throw ValidationError(ValidationRule::arity_mismatch, -1,
                          "strand count ends at " + std::to_string(n) + " but top arity is " + std::to_string(d.top));
}

struct Step {
  bool endpoint = false;
  int point = -1;   // boundary point id when endpoint
  NodeRef node;
  int moving = 0;   // +1 up, -1 down after the step
  int event = -1;
};

class Stepper {
 public:
  Stepper(const SlicedDiagram& d) : d_(d), m_(static_cast<int>(d.events.size())) {}

  Step up(NodeRef n) const {
    Step s;
    s.event = n.level;
    if (n.level == m_) {
      s.endpoint = true;
      s.point = d_.bottom + n.slot;
      s.event = -1;
      return s;
    }
    const Event& e = d_.events[n.level];
    const int i = e.pos;
    const int h = n.level;
    int slot = n.slot;
    s.moving = 1;
    switch (e.kind) {
      case EventKind::cup:
        if (slot >= i) slot += 2;
        break;
      case EventKind::cap:
        if (slot == i || slot == i + 1) {
          s.node = {h, slot == i ? i + 1 : i};
          s.moving = -1;
          return s;
        }
        if (slot > i + 1) slot -= 2;
        break;
      case EventKind::cross:
        if (slot == i) slot = i + 1;
        else if (slot == i + 1) slot = i;
        break;
      case EventKind::punctures:
        break;
    }
    s.node = {h + 1, slot};
    return s;
  }

  Step down(NodeRef n) const {
    Step s;
    if (n.level == 0) {
      s.endpoint = true;
      s.point = n.slot;
      return s;
    }
    const int h = n.level;
    const Event& e = d_.events[h - 1];
    s.event = h - 1;
    const int i = e.pos;
    int slot = n.slot;
    s.moving = -1;
    switch (e.kind) {
      case EventKind::cup:
        if (slot == i || slot == i + 1) {
          s.node = {h, slot == i ? i + 1 : i};
          s.moving = 1;
          return s;
        }
        if (slot > i + 1) slot -= 2;
        break;
      case EventKind::cap:
        if (slot >= i) slot += 2;
        break;
      case EventKind::cross:
        if (slot == i) slot = i + 1;
        else if (slot == i + 1) slot = i;
        break;
      case EventKind::punctures:
        break;
    }
    s.node = {h - 1, slot};
    return s;
  }

  Step step(NodeRef n, int moving) const { return moving > 0 ? up(n) : down(n); }

 private:
  const SlicedDiagram& d_;
  int m_;
};

struct Walk {
  std::vector<NodeRef> nodes;
  std::vector<int> dirs;
  std::vector<int> events;  // events[k] leaves nodes[k]
  bool closed = false;
  int endpoint = -1;
};

Walk walk(const Stepper& st, NodeRef start, int moving) {
  Walk w;
  NodeRef cur = start;
  int m = moving;
  while (true) {
    w.nodes.push_back(cur);
    w.dirs.push_back(m);
    const Step s = st.step(cur, m);
    w.events.push_back(s.event);
    if (s.endpoint) {
      w.endpoint = s.point;
      return w;
    }
    if (s.node == start) {
      w.closed = true;
      return w;
    }
    cur = s.node;
    m = s.moving;
  }
}

// Whether the step a -> b through `event` actually uses the event.
bool step_touches(const SlicedDiagram& d, int event, NodeRef a, NodeRef b) {
  if (event < 0) return false;
  const Event& e = d.events[event];
  switch (e.kind) {
    case EventKind::cup:
    case EventKind::cap:
      return a.level == b.level;
    case EventKind::cross: {
      const NodeRef& lower = a.level < b.level ? a : b;
      return lower.slot == e.pos || lower.slot == e.pos + 1;
    }
    case EventKind::punctures:
      return false;
  }
  return false;
}

void check_orientation_shape(const SlicedDiagram& d, std::size_t components) {
  if (!d.orientation) return;
  if (d.orientation->size() != components)
    throw ValidationError(ValidationRule::orientation_shape, -1,
                          "orientation has " + std::to_string(d.orientation->size()) + " signs for " +
                              std::to_string(components) + " components");
  for (int s : *d.orientation)
    if (s != 1 && s != -1) throw ValidationError(ValidationRule::orientation_shape, -1, "orientation signs must be +1 or -1");
}

const Event& crossing_at(const SlicedDiagram& d, int event_index) {
  if (event_index < 0 || event_index >= static_cast<int>(d.events.size()) ||
      d.events[event_index].kind != EventKind::cross)
    throw SkeinError("event " + std::to_string(event_index) + " is not a crossing");
  return d.events[event_index];
}

void require_oriented(const SlicedDiagram& d, const char* what) {
  if (!d.oriented()) throw SkeinError(std::string(what) + " requires an oriented diagram");
}

// Replaces events [pos, pos + old_len) by `repl`. When the input is oriented
// and `keep_orientation` is set, strand directions outside the window carry over.
SlicedDiagram splice(const SlicedDiagram& d, int pos, int old_len, std::vector<Event> repl, bool keep_orientation) {
  SlicedDiagram out;
  out.bottom = d.bottom;
  out.top = d.top;
  out.events.reserve(d.events.size() - old_len + repl.size());
  out.events.insert(out.events.end(), d.events.begin(), d.events.begin() + pos);
  const int new_len = static_cast<int>(repl.size());
  for (auto& e : repl) out.events.push_back(std::move(e));
  out.events.insert(out.events.end(), d.events.begin() + pos + old_len, d.events.end());
  validate(out);
  if (!keep_orientation || !d.oriented()) return out;

  const DiagramTrace old_trace(d);
  const DiagramTrace new_trace(out);
  Orientation signs;
  for (const Component& c : new_trace.components()) {
    int sign = 0;
    for (const NodeRef& n : c.nodes) {
      NodeRef old = n;
      if (n.level > pos && n.level < pos + new_len) continue;
      if (n.level >= pos + new_len) old.level = n.level - new_len + old_len;
      const int s = old_trace.direction(old) * new_trace.canonical_direction(n);
      if (sign == 0) sign = s;
      else if (sign != s)
        throw ValidationError(ValidationRule::orientation_inconsistent, pos, "rewrite breaks strand orientation");
    }
    signs.push_back(sign == 0 ? 1 : sign);
  }
  out.orientation = std::move(signs);
  return out;
}

}  // namespace

int SlicedDiagram::crossing_count() const {
  return static_cast<int>(std::count_if(events.begin(), events.end(),
                                        [](const Event& e) { return e.kind == EventKind::cross; }));
}

int SlicedDiagram::puncture_count() const {
  int g = 0;
  for (const Event& e : events)
    if (e.kind == EventKind::punctures) g += static_cast<int>(e.gaps.size());
  return g;
}

SlicedDiagram SlicedDiagram::unoriented() const {
  SlicedDiagram out = *this;
  out.orientation.reset();
  return out;
}

std::string diagram_key(const SlicedDiagram& d) {
  std::ostringstream os;
  os << 'b' << d.bottom << 't' << d.top << '|';
  for (const Event& e : d.events) {
    switch (e.kind) {
      case EventKind::cup: os << 'u' << e.pos; break;
      case EventKind::cap: os << 'n' << e.pos; break;
      case EventKind::cross: os << 'x' << e.pos << (e.over == Over::left ? 'L' : 'R'); break;
      case EventKind::punctures:
        os << 'p';
        for (int g : e.gaps) os << '.' << g;
        break;
    }
    os << ',';
  }
  if (d.orientation) {
    os << "|o";
    for (int s : *d.orientation) os << (s > 0 ? '+' : '-');
  }
  return os.str();
}

std::vector<int> level_widths(const SlicedDiagram& d) {
  std::vector<int> widths;
  widths.reserve(d.events.size() + 1);
  int n = d.bottom;
  widths.push_back(n);
  for (const Event& e : d.events) {
    if (e.kind == EventKind::cup) n += 2;
    else if (e.kind == EventKind::cap) n -= 2;
    widths.push_back(n);
  }
  return widths;
}

void validate(const SlicedDiagram& d) {
  check_slots(d);
  if (d.puncture_count() > 0 && !d.closed())
    throw ValidationError(ValidationRule::tangle_with_punctures, -1,
                          "diagrams with punctures must be closed (bottom = top = 0)");
  if (d.orientation) {
    const DiagramTrace trace(d);
    check_orientation_shape(d, trace.components().size());
  }
}

DiagramTrace::DiagramTrace(const SlicedDiagram& d) : orientation_(d.orientation) {
  check_slots(d);
  widths_ = level_widths(d);
  offsets_.resize(widths_.size() + 1, 0);
  for (std::size_t h = 0; h < widths_.size(); ++h) offsets_[h + 1] = offsets_[h] + widths_[h];
  const int total = offsets_.back();
  component_.assign(total, -1);
  canonical_dir_.assign(total, 0);

  const Stepper st(d);
  for (int h = 0; h < level_count(); ++h) {
    for (int s = 0; s < widths_[h]; ++s) {
      const NodeRef start{h, s};
      if (component_[index(start)] >= 0) continue;
      const int id = static_cast<int>(components_.size());
      Component comp;
      Walk fwd = walk(st, start, -1);
      if (fwd.closed) {
        comp.kind = ComponentKind::closed_loop;
        comp.nodes = std::move(fwd.nodes);
        comp.via = std::move(fwd.events);
        for (std::size_t k = 0; k < comp.nodes.size(); ++k) canonical_dir_[index(comp.nodes[k])] = fwd.dirs[k];
      } else {
        Walk back = walk(st, start, 1);
        comp.kind = ComponentKind::open_strand;
        comp.start_point = back.endpoint;
        comp.end_point = fwd.endpoint;
        for (std::size_t k = back.nodes.size(); k-- > 1;) {
          comp.nodes.push_back(back.nodes[k]);
          canonical_dir_[index(back.nodes[k])] = -back.dirs[k];
        }
        for (std::size_t k = back.nodes.size() - 1; k-- > 0;) comp.via.push_back(back.events[k]);
        for (std::size_t k = 0; k < fwd.nodes.size(); ++k) {
          comp.nodes.push_back(fwd.nodes[k]);
          canonical_dir_[index(fwd.nodes[k])] = fwd.dirs[k];
        }
        for (std::size_t k = 0; k + 1 < fwd.nodes.size(); ++k) comp.via.push_back(fwd.events[k]);
      }
      for (const NodeRef& n : comp.nodes) component_[index(n)] = id;
      const std::size_t steps = comp.via.size();
      for (std::size_t k = 0; k < steps; ++k) {
        const NodeRef a = comp.nodes[k];
        const NodeRef b = comp.nodes[(k + 1) % comp.nodes.size()];
        if (step_touches(d, comp.via[k], a, b)) comp.incidences.push_back(comp.via[k]);
      }
      components_.push_back(std::move(comp));
    }
  }
  if (orientation_) {
    check_orientation_shape(d, components_.size());
    for (std::size_t c = 0; c < components_.size(); ++c) components_[c].sign = (*orientation_)[c];
  }
}

int DiagramTrace::direction(NodeRef n) const {
  const int base = canonical_dir_[index(n)];
  if (!orientation_) return base;
  return base * (*orientation_)[component_[index(n)]];
}

std::vector<Component> trace_components(const SlicedDiagram& d) {
  validate(d);
  return DiagramTrace(d).components();
}

SlicedDiagram orient_from_endpoints(SlicedDiagram d, const std::vector<int>& bottom_dirs,
                                    const std::vector<int>& top_dirs, const std::vector<int>& loop_signs) {
  d.orientation.reset();
  validate(d);
  if (static_cast<int>(bottom_dirs.size()) != d.bottom || static_cast<int>(top_dirs.size()) != d.top)
    throw ValidationError(ValidationRule::orientation_shape, -1, "one direction per boundary point is required");
  int balance = 0;
  for (int x : bottom_dirs) {
    if (x != 1 && x != -1) throw ValidationError(ValidationRule::orientation_shape, -1, "endpoint directions must be +1 or -1");
    balance -= x;
  }
  for (int x : top_dirs) {
    if (x != 1 && x != -1) throw ValidationError(ValidationRule::orientation_shape, -1, "endpoint directions must be +1 or -1");
    balance += x;
  }
  if (balance != 0)
    throw ValidationError(ValidationRule::unbalanced_marking, -1,
                          "signed endpoint count is " + std::to_string(balance) + ", expected 0");
  const DiagramTrace trace(d);
  const int m = static_cast<int>(d.events.size());
  auto point_dir = [&](int point) { return point < d.bottom ? bottom_dirs[point] : top_dirs[point - d.bottom]; };
  auto point_node = [&](int point) {
    return point < d.bottom ? NodeRef{0, point} : NodeRef{m, point - d.bottom};
  };
  Orientation signs;
  std::size_t loop = 0;
  for (const Component& c : trace.components()) {
    if (c.kind == ComponentKind::closed_loop) {
      if (loop >= loop_signs.size())
        throw ValidationError(ValidationRule::orientation_shape, -1, "missing sign for a closed component");
      const int s = loop_signs[loop++];
      if (s != 1 && s != -1) throw ValidationError(ValidationRule::orientation_shape, -1, "loop signs must be +1 or -1");
      signs.push_back(s);
      continue;
    }
    const int s_start = point_dir(c.start_point) * trace.canonical_direction(point_node(c.start_point));
    const int s_end = point_dir(c.end_point) * trace.canonical_direction(point_node(c.end_point));
    if (s_start != s_end)
      throw ValidationError(ValidationRule::orientation_inconsistent, -1,
                            "boundary points " + std::to_string(c.start_point) + " and " +
                                std::to_string(c.end_point) + " of one strand are both oriented " +
                                (point_dir(c.start_point) * (c.start_point < d.bottom ? 1 : -1) > 0 ? "inward" : "outward"));
    signs.push_back(s_start);
  }
  if (loop != loop_signs.size())
    throw ValidationError(ValidationRule::orientation_shape, -1, "more loop signs than closed components");
  d.orientation = std::move(signs);
  return d;
}

SlicedDiagram orient_from_bottom(SlicedDiagram d, const std::vector<int>& bottom_dirs) {
  d.orientation.reset();
  validate(d);
  if (static_cast<int>(bottom_dirs.size()) != d.bottom)
    throw ValidationError(ValidationRule::orientation_shape, -1, "one direction per bottom point is required");
  const DiagramTrace trace(d);
  Orientation signs;
  for (const Component& c : trace.components()) {
    int sign = 0;
    for (int p : {c.start_point, c.end_point}) {
      if (p < 0 || p >= d.bottom) continue;
      const int s = bottom_dirs[p] * trace.canonical_direction({0, p});
      if (sign != 0 && sign != s)
        throw ValidationError(ValidationRule::orientation_inconsistent, -1,
                              "bottom points " + std::to_string(c.start_point) + " and " +
                                  std::to_string(c.end_point) + " are joined but point the same way");
      sign = s;
    }
    signs.push_back(sign == 0 ? 1 : sign);
  }
  d.orientation = std::move(signs);
  return d;
}

std::pair<std::vector<int>, std::vector<int>> endpoint_directions(const SlicedDiagram& d) {
  require_oriented(d, "endpoint_directions");
  validate(d);
  const DiagramTrace trace(d);
  const int m = static_cast<int>(d.events.size());
  std::vector<int> bottom, top;
  for (int s = 0; s < d.bottom; ++s) bottom.push_back(trace.direction({0, s}));
  for (int s = 0; s < d.top; ++s) top.push_back(trace.direction({m, s}));
  return {bottom, top};
}

namespace {

int crossing_sign_in(const DiagramTrace& trace, const Event& e, int event_index) {
  const int dl = trace.direction({event_index, e.pos});
  const int dr = trace.direction({event_index, e.pos + 1});
  return e.over == Over::left ? dl * dr : -dl * dr;
}

}  // namespace

int crossing_sign(const SlicedDiagram& d, int event_index) {
  require_oriented(d, "crossing_sign");
  const Event& e = crossing_at(d, event_index);
  validate(d);
  return crossing_sign_in(DiagramTrace(d), e, event_index);
}

int writhe(const SlicedDiagram& d) {
  require_oriented(d, "writhe");
  validate(d);
  const DiagramTrace trace(d);
  int w = 0;
  for (int i = 0; i < static_cast<int>(d.events.size()); ++i)
    if (d.events[i].kind == EventKind::cross) w += crossing_sign_in(trace, d.events[i], i);
  return w;
}

std::vector<std::vector<long>> winding_table(const SlicedDiagram& d) {
  validate(d);
  const DiagramTrace trace(d);
  const int g = d.puncture_count();
  std::vector<std::vector<long>> table(trace.components().size(), std::vector<long>(g, 0));
  const int m = static_cast<int>(d.events.size());
  int puncture = 0;
  for (int row = 0; row < m; ++row) {
    const Event& pr = d.events[row];
    if (pr.kind != EventKind::punctures) continue;
    for (int gap : pr.gaps) {
      // Upward ray from the puncture; k tracks its gap as events reshape the row.
      int k = gap;
      for (int h = row + 1; h < m; ++h) {
        const Event& e = d.events[h];
        const int i = e.pos;
        switch (e.kind) {
          case EventKind::cup:
            if (k > i) k += 2;
            break;
          case EventKind::cap:
            if (k == i + 1) {
              const NodeRef left{h, i};
              table[trace.component_of(left)][puncture] -= trace.direction(left);
              k = i;
            } else if (k > i + 1) {
              k -= 2;
            }
            break;
          case EventKind::cross:
            if (k == i + 1) {
              const NodeRef left{h, i};
              table[trace.component_of(left)][puncture] -= trace.direction(left);
              k = i;
            }
            break;
          case EventKind::punctures:
            break;
        }
      }
      ++puncture;
    }
  }
  return table;
}

long winding(const SlicedDiagram& d, int component, int puncture) {
  const auto table = winding_table(d);
  if (component < 0 || component >= static_cast<int>(table.size())) throw SkeinError("component index out of range");
  if (puncture < 1 || puncture > d.puncture_count()) throw SkeinError("puncture index out of range");
  return table[component][puncture - 1];
}

std::vector<long> winding_vector(const SlicedDiagram& d) {
  require_oriented(d, "winding_vector");
  const auto table = winding_table(d);
  std::vector<long> total(d.puncture_count(), 0);
  for (const auto& row : table)
    for (std::size_t j = 0; j < row.size(); ++j) total[j] += row[j];
  return total;
}

SlicedDiagram smooth(const SlicedDiagram& d, int event_index, Smoothing which) {
  const Event& e = crossing_at(d, event_index);
  const int i = e.pos;
  // For over = left the counterclockwise smoothing keeps the two strands vertical.
  const bool vertical = (e.over == Over::left) == (which == Smoothing::cc);
  std::vector<Event> repl;
  if (!vertical) repl = {Event::cap(i), Event::cup(i)};
  return splice(d.unoriented(), event_index, 1, std::move(repl), false);
}

SkeinTriple skein_triple(const SlicedDiagram& d, int event_index) {
  require_oriented(d, "skein_triple");
  const Event& e = crossing_at(d, event_index);
  validate(d);
  const DiagramTrace trace(d);
  const int i = e.pos;
  const int dl = trace.direction({event_index, i});
  const int dr = trace.direction({event_index, i + 1});
  const Over positive = dl * dr > 0 ? Over::left : Over::right;
  SkeinTriple t;
  t.plus = splice(d, event_index, 1, {Event::cross(i, positive)}, true);
  t.minus = splice(d, event_index, 1, {Event::cross(i, flip(positive))}, true);
  std::vector<Event> repl;
  if (dl != dr) repl = {Event::cap(i), Event::cup(i)};
  t.zero = splice(d, event_index, 1, std::move(repl), true);
  return t;
}

Location first_strand_location(const SlicedDiagram& d) {
  const auto widths = level_widths(d);
  for (int h = 0; h < static_cast<int>(widths.size()); ++h)
    if (widths[h] > 0) return {h, 0};
  throw SkeinError("diagram has no strands");
}

SlicedDiagram add_kink(const SlicedDiagram& d, Location loc, int sign) {
  if (sign != 1 && sign != -1) throw SkeinError("kink sign must be +1 or -1");
  validate(d);
  const auto widths = level_widths(d);
  if (loc.event_pos < 0 || loc.event_pos >= static_cast<int>(widths.size()) || loc.slot < 0 ||
      loc.slot >= widths[loc.event_pos])
    throw SkeinError("invalid kink location: no strand at slot " + std::to_string(loc.slot) + " before event " +
                     std::to_string(loc.event_pos));
  const int i = loc.slot;
  return splice(d, loc.event_pos, 0,
                {Event::cup(i + 1), Event::cross(i, sign > 0 ? Over::left : Over::right), Event::cap(i + 1)}, true);
}

SlicedDiagram disjoint_unknot(const SlicedDiagram& d) {
  validate(d);
  return splice(d, 0, 0, {Event::cup(0), Event::cap(0)}, true);
}

SlicedDiagram glue_diagrams(const SlicedDiagram& lower, const SlicedDiagram& upper, GlueMode mode) {
  validate(lower);
  validate(upper);
  if (mode == GlueMode::side_by_side && (!lower.closed() || !upper.closed()))
    throw SkeinError("side_by_side gluing needs two closed diagrams");
  if (lower.top != upper.bottom)
    throw SkeinError("arity mismatch: lower diagram has " + std::to_string(lower.top) + " top points, upper has " +
                     std::to_string(upper.bottom) + " bottom points");
  const bool oriented = lower.oriented() && upper.oriented();
  if (oriented && lower.top > 0) {
    const auto lower_top = endpoint_directions(lower).second;
    const auto upper_bottom = endpoint_directions(upper).first;
    if (lower_top != upper_bottom) throw SkeinError("orientation mismatch at the gluing interface");
  }
  SlicedDiagram out;
  out.bottom = lower.bottom;
  out.top = upper.top;
  out.events = lower.events;
  out.events.insert(out.events.end(), upper.events.begin(), upper.events.end());
  validate(out);
  if (!oriented) return out;

  const DiagramTrace lt(lower), ut(upper), nt(out);
  const int split = static_cast<int>(lower.events.size());
  Orientation signs;
  for (const Component& c : nt.components()) {
    const NodeRef n = c.nodes.front();
    const int dir = n.level <= split ? lt.direction(n) : ut.direction({n.level - split, n.slot});
    signs.push_back(dir * nt.canonical_direction(n));
  }
  out.orientation = std::move(signs);
  return out;
}

namespace {

bool r1_pattern(const SlicedDiagram& d, int pos) {
  if (pos < 0 || pos + 2 >= static_cast<int>(d.events.size())) return false;
  const Event& a = d.events[pos];
  const Event& x = d.events[pos + 1];
  const Event& b = d.events[pos + 2];
  if (a.kind != EventKind::cup || x.kind != EventKind::cross || b.kind != EventKind::cap) return false;
  // Curl on the right of the strand, or on its left.
  if (a.pos == b.pos && x.pos == a.pos - 1) return true;
  if (a.pos == b.pos && x.pos == a.pos + 1) return true;
  return false;
}

bool cyclic_over(Over x, Over y, Over z) {
  // Pairs (a,b):x, (a,c):y, (b,c):z with "left strand over" meaning the
  // earlier-named strand is on top. A cycle has no topmost strand.
  const bool ab = x == Over::left, ac = y == Over::left, bc = z == Over::left;
  return (ab && bc && !ac) || (!ab && !bc && ac);
}

int r3_direction(const SlicedDiagram& d, int pos) {
  if (pos < 0 || pos + 2 >= static_cast<int>(d.events.size())) return 0;
  const Event& p = d.events[pos];
  const Event& q = d.events[pos + 1];
  const Event& r = d.events[pos + 2];
  if (p.kind != EventKind::cross || q.kind != EventKind::cross || r.kind != EventKind::cross) return 0;
  if (p.pos == r.pos && q.pos == p.pos + 1 && !cyclic_over(p.over, q.over, r.over)) return 1;
  if (p.pos == r.pos && q.pos == p.pos - 1 && !cyclic_over(r.over, q.over, p.over)) return -1;
  return 0;
}

}  // namespace

std::vector<int> r3_sites(const SlicedDiagram& d) {
  std::vector<int> out;
  for (int p = 0; p + 2 < static_cast<int>(d.events.size()); ++p)
    if (r3_direction(d, p) != 0) out.push_back(p);
  return out;
}

std::vector<int> r1_sites(const SlicedDiagram& d) {
  std::vector<int> out;
  for (int p = 0; p + 2 < static_cast<int>(d.events.size()); ++p)
    if (r1_pattern(d, p)) out.push_back(p);
  return out;
}

SlicedDiagram rmove(const SlicedDiagram& d, const ReidemeisterMove& move) {
  validate(d);
  const int pos = move.loc.event_pos;
  using K = ReidemeisterMove::Kind;
  switch (move.kind) {
    case K::r1_add:
      return add_kink(d, move.loc, move.sign);
    case K::r1_remove:
      if (!r1_pattern(d, pos)) throw SkeinError("r1_remove: no curl pattern at event " + std::to_string(pos));
      return splice(d, pos, 3, {}, true);
    case K::r2: {
      const auto widths = level_widths(d);
      const int i = move.loc.slot;
      if (pos < 0 || pos >= static_cast<int>(widths.size()) || i < 0 || i + 1 >= widths[pos])
        throw SkeinError("r2: need two adjacent strands at slot " + std::to_string(i) + " before event " +
                         std::to_string(pos));
      return splice(d, pos, 0, {Event::cross(i, move.over), Event::cross(i, flip(move.over))}, true);
    }
    case K::r2_remove: {
      if (pos < 0 || pos + 1 >= static_cast<int>(d.events.size())) throw SkeinError("r2_remove: position out of range");
      const Event& a = d.events[pos];
      const Event& b = d.events[pos + 1];
      if (a.kind != EventKind::cross || b.kind != EventKind::cross || a.pos != b.pos || a.over == b.over)
        throw SkeinError("r2_remove: no bigon pattern at event " + std::to_string(pos));
      return splice(d, pos, 2, {}, true);
    }
    case K::r3: {
      const int dir = r3_direction(d, pos);
      if (dir == 0) throw SkeinError("r3: no triangle pattern at event " + std::to_string(pos));
      const Event& p = d.events[pos];
      const Event& q = d.events[pos + 1];
      const Event& r = d.events[pos + 2];
      const int i = q.pos;
      return splice(d, pos, 3, {Event::cross(i, r.over), Event::cross(p.pos, q.over), Event::cross(i, p.over)}, true);
    }
  }
  throw SkeinError("unknown Reidemeister move");
}

SlicedDiagram random_diagram(std::uint64_t seed, const RandomParams& params) {
  if (params.max_crossings < 0 || params.max_crossings > 24) throw SkeinError("max_crossings must lie in 0..24");
  if (params.genus < 0) throw SkeinError("genus must be nonnegative");
  if (params.bottom < 0 || params.top < 0 || (params.bottom + params.top) % 2 != 0)
    throw SkeinError("bottom and top arities must be nonnegative with even sum");
  if (params.genus > 0 && (params.bottom != 0 || params.top != 0))
    throw SkeinError("diagrams with punctures must be closed");
  const int max_width = std::max({params.max_width, params.bottom, params.top, 2});

  std::mt19937_64 rng(seed);
  auto below = [&rng](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };

  SlicedDiagram d;
  d.bottom = params.bottom;
  d.top = params.top;
  int crossings_left = below(params.max_crossings + 1);
  int punctures_left = params.genus;
  int n = params.bottom;
  int idle_budget = 2 + below(4);

  while (crossings_left > 0 || punctures_left > 0 || idle_budget > 0) {
    const int w_cup = n + 2 <= max_width ? (n < 2 ? 6 : 2) : 0;
    const int w_cap = n >= 2 ? (n >= max_width - 1 ? 4 : 2) : 0;
    const int w_cross = (n >= 2 && crossings_left > 0) ? 5 : 0;
    const int w_punct = punctures_left > 0 ? (n >= 2 ? 2 : 1) : 0;
    const int total = w_cup + w_cap + w_cross + w_punct;
    int pick = below(total);
    if (pick < w_cup) {
      d.events.push_back(Event::cup(below(n + 1)));
      n += 2;
    } else if ((pick -= w_cup) < w_cap) {
      d.events.push_back(Event::cap(below(n - 1)));
      n -= 2;
    } else if ((pick -= w_cap) < w_cross) {
      d.events.push_back(Event::cross(below(n - 1), below(2) == 0 ? Over::left : Over::right));
      --crossings_left;
    } else {
      const int count = std::min(punctures_left, 1 + below(2));
      std::vector<int> gaps;
      for (int k = 0; k < count; ++k) gaps.push_back(below(n + 1));
      std::sort(gaps.begin(), gaps.end());
      d.events.push_back(Event::punctures(std::move(gaps)));
      punctures_left -= count;
    }
    if (crossings_left == 0 && punctures_left == 0) --idle_budget;
  }
  while (n > params.top) {
    d.events.push_back(Event::cap(below(n - 1)));
    n -= 2;
  }
  while (n < params.top) {
    d.events.push_back(Event::cup(below(n + 1)));
    n += 2;
  }
  validate(d);
  if (params.oriented) {
    const DiagramTrace trace(d);
    Orientation signs;
    for (std::size_t c = 0; c < trace.components().size(); ++c) signs.push_back(below(2) == 0 ? 1 : -1);
    d.orientation = std::move(signs);
  }
  return d;
}

SlicedDiagram laminar_realization(const std::vector<std::vector<int>>& curves, int genus, const std::vector<int>& signs) {
  const int k = static_cast<int>(curves.size());
  if (!signs.empty() && static_cast<int>(signs.size()) != k) throw SkeinError("one sign per curve is required");
  std::vector<std::vector<int>> sets = curves;
  for (auto& s : sets) {
    std::sort(s.begin(), s.end());
    if (s.empty()) throw SkeinError("curves must enclose at least one puncture");
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw SkeinError("repeated puncture label in a curve");
    if (s.front() < 1 || s.back() > genus) throw SkeinError("puncture label out of range 1.." + std::to_string(genus));
  }
  auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto disjoint = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> both;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
    return both.empty();
  };
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (!subset(sets[a], sets[b]) && !subset(sets[b], sets[a]) && !disjoint(sets[a], sets[b]))
        throw SkeinError("curve family is not laminar");

  // Outer curves first; among equal sets, the earlier copy encloses the later.
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (sets[a].size() != sets[b].size()) return sets[a].size() > sets[b].size();
    return sets[a] < sets[b];
  });
  std::vector<int> parent(k, -1);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < x; ++y)
      if (subset(sets[order[x]], sets[order[y]])) parent[order[x]] = order[y];

  // Preorder: children follow their parent in `order`, so emitting in that
  // order inserts every pair inside its (already placed) parent.
  SlicedDiagram d;
  std::vector<int> row;  // curve id per slot
  for (int v : order) {
    int at = static_cast<int>(row.size());
    if (parent[v] >= 0) {
      const auto legs = std::find(row.begin(), row.end(), parent[v]);
      at = static_cast<int>(std::find(legs + 1, row.end(), parent[v]) - row.begin());
    }
    d.events.push_back(Event::cup(at));
    row.insert(row.begin() + at, {v, v});
  }
  for (int j = 1; j <= genus; ++j) {
    int inner = -1;
    for (int v : order)
      if (std::binary_search(sets[v].begin(), sets[v].end(), j)) inner = v;
    int gap = 0;
    if (inner >= 0) gap = static_cast<int>(std::find(row.begin(), row.end(), inner) - row.begin()) + 1;
    d.events.push_back(Event::punctures({gap}));
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int at = static_cast<int>(std::find(row.begin(), row.end(), *it) - row.begin());
    d.events.push_back(Event::cap(at));
    row.erase(row.begin() + at, row.begin() + at + 2);
  }
  validate(d);
  if (!signs.empty()) {
    // Loop components appear in cup order, which is `order`.
    Orientation o;
    for (int v : order) o.push_back(signs[v] > 0 ? 1 : -1);
    d.orientation = std::move(o);
    validate(d);
  }
  return d;
}

SlicedDiagram reference_tangle(const std::vector<long>& alpha) {
  std::vector<std::vector<int>> curves;
  std::vector<int> signs;
  for (std::size_t j = 0; j < alpha.size(); ++j)
    for (long c = 0; c < std::abs(alpha[j]); ++c) {
      curves.push_back({static_cast<int>(j) + 1});
      signs.push_back(alpha[j] > 0 ? 1 : -1);
    }
  SlicedDiagram d = laminar_realization(curves, static_cast<int>(alpha.size()), signs);
  if (!d.orientation) d.orientation = Orientation{};
  return d;
}

}  // namespace skein
