#pragma once

#include <functional>
#include <optional>
#include <random>

#include "p2c/iso_engine.hpp"

namespace p2c {

// Hard ceiling for enumeration-backed work on one graph. Refusing beyond the
// guard (instance-too-large) beats silently stalling; large instances belong
// to the planted oracle, which never enumerates.
inline constexpr int kDefaultIsoGuard = 14;

// Relabels g through phi; phi must be injective on V(g).
SimpleGraph relabeled(const SimpleGraph& g, const Isomorphism& phi);

// All isomorphisms g -> h, in lexicographic order of their image sequence
// over ascending domain ids. Empty when none exist.
std::vector<Isomorphism> enumerate_isomorphisms(const SimpleGraph& g,
                                                const SimpleGraph& h,
                                                int guard = kDefaultIsoGuard);

// Streaming variant; the callback may return false to stop early.
void for_each_isomorphism(const SimpleGraph& g, const SimpleGraph& h,
                          int guard,
                          const std::function<bool(const Isomorphism&)>& cb);

// Lexicographically least isomorphism, or nullopt.
std::optional<Isomorphism> first_isomorphism(const SimpleGraph& g,
                                             const SimpleGraph& h,
                                             int guard = kDefaultIsoGuard);

enum class IsoPolicyKind {
  HonestLex,             // least pair of the least isomorphism
  AdversarialMinFreedom, // pair contained in the fewest isomorphisms
  SeededRandom,          // random pair of a randomly discovered isomorphism
  Planted,               // canonical extension of a fixed isomorphism
};

const char* to_string(IsoPolicyKind k);

struct IsoOraclePolicy {
  IsoPolicyKind kind = IsoPolicyKind::HonestLex;
  unsigned seed = 0;
  int guard = kDefaultIsoGuard;
  Isomorphism planted;  // Planted only; must be an isomorphism of the inputs
};

// Contract-respecting oracle driven by a policy. Honest, adversarial and
// random answers come from enumeration over the queried pair (guard
// applies); planted answers extend the fixed map over clique members by
// (anchor image, size, ordinal) and never enumerate.
class PolicyIsoOracle : public IsoOracle {
 public:
  explicit PolicyIsoOracle(IsoOraclePolicy policy);

  std::pair<VertexId, VertexId> answer(const GadgetGraph& gG,
                                       const GadgetGraph& gH) override;

 private:
  std::pair<VertexId, VertexId> answer_planted(const GadgetGraph& gG,
                                               const GadgetGraph& gH);

  IsoOraclePolicy policy_;
  std::mt19937 rng_;
  bool first_call_ = true;
};

// Image of x under the canonical extension of `planted` to a gadget pair:
// original vertices map through `planted`; the clique member with ordinal t
// of the size-s clique at anchor a maps to the member with ordinal t of the
// size-s clique at planted(a). nullopt when the H side lacks the matching
// vertex, which means the two registries drifted apart.
std::optional<VertexId> planted_extension_image(const GadgetGraph& gG,
                                                const GadgetGraph& gH,
                                                const Isomorphism& planted,
                                                VertexId x);

// The canonical 5-vertex demonstration pair: two isomorphisms overall, while
// deleting vertex 5 of G and vertex 2 of H leaves six isomorphisms of which
// only two are compatible with matching 5 to 2. The search scans all graphs
// on {1..5} in ascending edge-bitmask order and returns the first hit; if
// none existed the premise would be wrong, so that raises FixtureNotFound.
struct Example1Fixture {
  SimpleGraph G, H;
  Isomorphism phi1, phi2;
  int naive_iso_count = 0;         // isomorphisms after the naive deletion
  int naive_compatible_count = 0;  // of those, extendable by (5, 2)
};

Example1Fixture find_example1_fixture();

}  // namespace p2c
