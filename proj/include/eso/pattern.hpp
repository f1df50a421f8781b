#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eso/formula.hpp"
#include "eso/graph.hpp"

namespace eso {

/// Pattern graph (C, A+, A-). Arcs are stored as bit rows: bit d of
/// plus[c] is set iff (c,d) is a plus-arc. At most 64 colours.
struct PatternGraph {
  std::vector<std::string> colors;
  std::vector<std::uint64_t> plus;
  std::vector<std::uint64_t> minus;

  int size() const { return static_cast<int>(colors.size()); }
  bool has_plus(int c, int d) const { return (plus[c] >> d) & 1U; }
  bool has_minus(int c, int d) const { return (minus[c] >> d) & 1U; }
  void add_plus(int c, int d);
  void add_minus(int c, int d);
  int color_index(const std::string& name) const;

  bool operator==(const PatternGraph&) const = default;

  explicit PatternGraph(std::vector<std::string> names = {});

  /// Two-colour pattern over {black=0, white=1}. Bits 0..3 of `code` are
  /// the plus-arcs (c,d) at bit 2c+d, bits 4..7 the minus-arcs.
  static PatternGraph two_color(unsigned code);
};

/// (C, A-, A+): saturating g with p is saturating complement(g) with this.
PatternGraph swap_arcs(const PatternGraph& p);

struct SaturationCertificate {
  std::vector<int> coloring;
  std::vector<int> witness;
  bool operator==(const SaturationCertificate&) const = default;
};

/// Colours are the 2^n membership vectors of the n monadic relations (bit i
/// for relation i). A+ and A- are read off the matrix with E(x,y)=E(y,x)
/// true resp. false, E(x,x)=E(y,y)=false and x != y. A colour whose matrix
/// holds on the diagonal (x = y, all E false) may pick any other vertex as
/// witness, so it gets arcs to every colour in both sets. The resulting
/// language equals the formula's on graphs with at least two vertices.
PatternGraph compile_pattern(const Formula& f);

/// Throws ValidationError if the maps are not total over V.
bool verify_certificate(const Graph& g, const PatternGraph& p, const SaturationCertificate& cert);

inline constexpr std::uint64_t kDefaultSaturationBudget = std::uint64_t{1} << 24;

/// Enumerates all |C|^n colourings; for a fixed colouring each vertex just
/// needs some licensed witness. Requires n <= 64.
std::optional<SaturationCertificate> saturate_exact(
    const Graph& g, const PatternGraph& p, std::uint64_t budget = kDefaultSaturationBudget);

enum class CycleKind { Any, Mixed, Pure };

struct SelfSaturatingCycle {
  std::vector<int> vertices;  // v1..vk, the closing step returns to v1
  std::vector<int> colors;
  bool mixed = false;
};

/// Whether the listed vertices, colours and closing step form a
/// self-saturating cycle. Fills in nothing; `mixed` is not consulted.
bool check_self_saturating_cycle(const Graph& g, const PatternGraph& p,
                                 const SelfSaturatingCycle& cycle);

/// Depth-first search over cycles of 2..max_len distinct vertices starting
/// at their smallest vertex, with colours chosen along the way.
std::optional<SelfSaturatingCycle> find_self_saturating_cycle(const Graph& g,
                                                              const PatternGraph& p,
                                                              int max_len,
                                                              CycleKind kind = CycleKind::Any);

/// Follows the witness map from `start` until it repeats.
SelfSaturatingCycle cycle_from_certificate(const Graph& g, const SaturationCertificate& cert,
                                           int start = 0);

struct TwoColorDecision {
  bool saturable = false;
  std::optional<SaturationCertificate> certificate;
  std::string branch;
};

/// Decides saturation for two-colour patterns by the shape of P:
///   acyclic          no
///   two-cycles       cycles in both arc sets: yes iff n >= 2
///   one-cycle/...    a cycle in exactly one arc set, case ladder
///   alternating      a +/- alternating 2-cycle only: 4-vertex condition
///   fallback         exact search (not expected to fire)
/// Constructive branches return verified certificates.
TwoColorDecision fo_decide_two_color(const Graph& g, const PatternGraph& p);

/// How often fo_decide_two_color has used the exact-search fallback.
std::uint64_t two_color_fallback_count();

/// E(a,b), not E(b,c), E(c,d), not E(d,a) for pairwise distinct a,b,c,d.
bool has_alternating_four_cycle(const Graph& g);

}  // namespace eso
