#ifndef IGBAND_VERIFY_HPP
#define IGBAND_VERIFY_HPP

#include <map>
#include <string>

#include "igband/ig_presentation.hpp"
#include "igband/presentation.hpp"
#include "igband/tietze.hpp"

namespace igband {

enum class CheckVerdict { Pass, Fail, Unknown };

std::string verdict_name(CheckVerdict v);

using GenMap = std::map<std::string, Word>;

struct HomCheckResult {
  CheckVerdict verdict = CheckVerdict::Unknown;
  std::string detail;
};

// Checks that mapping each generator of src to its image word extends to a
// homomorphism: every relator of src must map to the identity of dst.
// Unknown when dst's word problem is unknown at the coset limit.
HomCheckResult verify_homomorphism(GroupPresentation const& src,
                                   GroupPresentation const& dst,
                                   GenMap const& images,
                                   int max_cosets = 100000);

// The end-to-end isomorphism evidence for one run: the simplified
// presentation against the group presentation the band was built from.
struct TheoremReport {
  // Literal match: same generator set, same relation multiset.
  CheckVerdict presentations_match = CheckVerdict::Unknown;
  std::string presentations_detail;
  // Generator maps in both directions extend to homomorphisms.
  HomCheckResult forward;
  HomCheckResult backward;
  // Independent enumerations agree: the input group, the unsimplified
  // subgroup presentation, and the simplified presentation.
  CheckVerdict orders_match = CheckVerdict::Unknown;
  std::string orders_detail;
  long long input_order = -1;       // -1 when unknown at the limit
  long long subgroup_order = -1;
  long long simplified_order = -1;

  CheckVerdict overall() const;
};

TheoremReport verify_theorem(GroupPresentation const& input,
                             IgPresentation const& ig,
                             SimplifyResult const& simplified,
                             int max_cosets = 100000);

}  // namespace igband

#endif  // IGBAND_VERIFY_HPP
