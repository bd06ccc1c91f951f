// Morse-sliced tangle diagrams in a rectangle with punctures.
//
// A diagram is read bottom to top as a word of events acting on a row of
// strand slots. Between consecutive events the strands sit at slots
// 0..width-1; a gap position k in 0..width lies between slot k-1 and slot k.
// Punctures are introduced by PunctureRow events and numbered 1..g in event
// order (left to right within a row). Framing is the blackboard framing.
#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace skein {

enum class EventKind { cup, cap, cross, punctures };

/// Which strand of a crossing is on top: the one entering from the left slot
/// (slot i at the bottom, leaving at slot i+1) or the one entering from the right.
enum class Over { left, right };

inline Over flip(Over o) { return o == Over::left ? Over::right : Over::left; }

struct Event {
  EventKind kind = EventKind::cup;
  int pos = 0;
  Over over = Over::left;   // cross only
  std::vector<int> gaps;    // punctures only, nondecreasing

  static Event cup(int i) { return {EventKind::cup, i, Over::left, {}}; }
  static Event cap(int i) { return {EventKind::cap, i, Over::left, {}}; }
  static Event cross(int i, Over o) { return {EventKind::cross, i, o, {}}; }
  static Event punctures(std::vector<int> gaps) { return {EventKind::punctures, 0, Over::left, std::move(gaps)}; }

  friend bool operator==(const Event&, const Event&) = default;
  friend auto operator<=>(const Event&, const Event&) = default;
};

/// Per-component orientation signs, in trace order. Sign +1 means the
/// component's first node (lowest level, then leftmost slot) is traversed
/// downward; a simple closed loop with sign +1 therefore runs counterclockwise.
using Orientation = std::vector<int>;

struct SlicedDiagram {
  int bottom = 0;
  int top = 0;
  std::vector<Event> events;
  std::optional<Orientation> orientation;

  bool oriented() const { return orientation.has_value(); }
  bool closed() const { return bottom == 0 && top == 0; }
  int crossing_count() const;
  int puncture_count() const;
  SlicedDiagram unoriented() const;

  friend bool operator==(const SlicedDiagram&, const SlicedDiagram&) = default;
  friend auto operator<=>(const SlicedDiagram&, const SlicedDiagram&) = default;
};

/// Compact textual key, stable across runs; used for caching and ordering.
std::string diagram_key(const SlicedDiagram& d);

/// Throws ValidationError on the first violated invariant.
void validate(const SlicedDiagram& d);

/// Strand count between event `level - 1` and event `level`, for level in 0..events.size().
std::vector<int> level_widths(const SlicedDiagram& d);

struct NodeRef {
  int level = 0;
  int slot = 0;
  friend bool operator==(const NodeRef&, const NodeRef&) = default;
  friend auto operator<=>(const NodeRef&, const NodeRef&) = default;
};

enum class ComponentKind { closed_loop, open_strand };

struct Component {
  ComponentKind kind = ComponentKind::closed_loop;
  /// Strand pieces in canonical traversal order (see Orientation).
  std::vector<NodeRef> nodes;
  /// via[k] is the event passed between nodes[k] and nodes[k+1] (cyclically for loops).
  std::vector<int> via;
  /// Events that actually touch the strand (cups, caps, crossings), in traversal order.
  std::vector<int> incidences;
  /// Boundary point ids (bottom slots 0..b-1, top slots b..b+t-1), open strands only.
  int start_point = -1;
  int end_point = -1;
  /// Orientation sign, 0 when the diagram is unoriented.
  int sign = 0;
};

/// Node-level view of a validated diagram.
class DiagramTrace {
 public:
  explicit DiagramTrace(const SlicedDiagram& d);

  int level_count() const { return static_cast<int>(widths_.size()); }
  int width(int level) const { return widths_[level]; }
  const std::vector<Component>& components() const { return components_; }
  int component_of(NodeRef n) const { return component_[index(n)]; }
  /// Vertical direction (+1 up, -1 down) of the node under the canonical orientation.
  int canonical_direction(NodeRef n) const { return canonical_dir_[index(n)]; }
  /// Actual direction under the diagram's orientation (or canonical if unoriented).
  int direction(NodeRef n) const;

 private:
  int index(NodeRef n) const { return offsets_[n.level] + n.slot; }

  std::optional<Orientation> orientation_;
  std::vector<int> widths_;
  std::vector<int> offsets_;
  std::vector<int> component_;
  std::vector<int> canonical_dir_;
  std::vector<Component> components_;
};

std::vector<Component> trace_components(const SlicedDiagram& d);

/// Assigns orientation from endpoint directions (+1 = strand moves up at that
/// boundary point) plus signs for the closed loops in trace order.
SlicedDiagram orient_from_endpoints(SlicedDiagram d, const std::vector<int>& bottom_dirs,
                                    const std::vector<int>& top_dirs, const std::vector<int>& loop_signs);

/// Orients strands touching the bottom edge to match `bottom_dirs`; every
/// other component gets sign +1. Throws when a bottom-to-bottom strand
/// would need both ends to point the same way.
SlicedDiagram orient_from_bottom(SlicedDiagram d, const std::vector<int>& bottom_dirs);

/// Directions (+1 up) at the bottom and top boundary points of an oriented diagram.
std::pair<std::vector<int>, std::vector<int>> endpoint_directions(const SlicedDiagram& d);

/// Sign of the crossing at `event_index`; requires an oriented diagram.
int crossing_sign(const SlicedDiagram& d, int event_index);
int writhe(const SlicedDiagram& d);

/// Winding numbers: result[c][j] is the winding of component c around puncture j+1.
/// Uses the diagram orientation, or the canonical one when unoriented.
std::vector<std::vector<long>> winding_table(const SlicedDiagram& d);
long winding(const SlicedDiagram& d, int component, int puncture);
/// Homology class in H_1 of the g-holed disk: per-puncture sums over components.
std::vector<long> winding_vector(const SlicedDiagram& d);

enum class Smoothing { cc, c };

/// cc receives coefficient A in the bracket relation, c receives A^-1.
SlicedDiagram smooth(const SlicedDiagram& d, int event_index, Smoothing which);

struct SkeinTriple {
  SlicedDiagram plus;
  SlicedDiagram minus;
  SlicedDiagram zero;
};

SkeinTriple skein_triple(const SlicedDiagram& d, int event_index);

/// Position between events: insertion happens before event `event_pos`,
/// on the strand at `slot` of that level.
struct Location {
  int event_pos = 0;
  int slot = 0;
};

/// The lowest strand segment (leftmost slot of the first nonempty level).
/// Throws SkeinError when the diagram has no strands.
Location first_strand_location(const SlicedDiagram& d);

/// Inserts a curl of the given crossing sign on a strand.
SlicedDiagram add_kink(const SlicedDiagram& d, Location loc, int sign);
/// Adds a trivially framed unknot below and left of everything else.
SlicedDiagram disjoint_unknot(const SlicedDiagram& d);

enum class GlueMode { stack, side_by_side };

SlicedDiagram glue_diagrams(const SlicedDiagram& lower, const SlicedDiagram& upper, GlueMode mode);

struct ReidemeisterMove {
  enum class Kind { r1_add, r1_remove, r2, r2_remove, r3 };
  Kind kind = Kind::r2;
  Location loc;
  int sign = 1;              // r1_add
  Over over = Over::left;    // r2: over flag of the first inserted crossing
};

SlicedDiagram rmove(const SlicedDiagram& d, const ReidemeisterMove& move);

/// Event positions where an r3 move applies.
std::vector<int> r3_sites(const SlicedDiagram& d);
/// Event positions where r1_remove applies.
std::vector<int> r1_sites(const SlicedDiagram& d);

struct RandomParams {
  int max_crossings = 6;
  int genus = 0;
  int bottom = 0;
  int top = 0;
  int max_width = 8;
  bool oriented = true;
};

SlicedDiagram random_diagram(std::uint64_t seed, const RandomParams& params);

/// Crossingless closed diagram realizing a laminar family of puncture
/// subsets (1-based labels), one puncture per row. `signs` orient the curves
/// (+1 counterclockwise); pass an empty vector for an unoriented result.
SlicedDiagram laminar_realization(const std::vector<std::vector<int>>& curves, int genus,
                                  const std::vector<int>& signs = {});

/// The zero-writhe reference tangle for a class: |alpha_j| parallel circles
/// around puncture j, counterclockwise when alpha_j > 0.
SlicedDiagram reference_tangle(const std::vector<long>& alpha);

}  // namespace skein
