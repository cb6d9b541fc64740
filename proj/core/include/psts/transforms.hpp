#pragma once

#include <string>
#include <vector>

#include "psts/analysis.hpp"
#include "psts/configuration.hpp"

namespace psts {

/// Data for replacing the sides {q,a1,b1}, {q,a2,b2} of two maximal complete
/// subgraphs with apex p by the triples {q,a1,b2}, {q,b1,a2}. Points are
/// stored by label so certificates survive serialisation.
struct SwapCertificate {
  std::string p;
  std::string a1, b1;
  std::string a2, b2;
  std::string q;

  friend bool operator==(const SwapCertificate&, const SwapCertificate&) = default;
  friend auto operator<=>(const SwapCertificate&, const SwapCertificate&) = default;
};

/// Adds n fresh points to a binomial configuration of index n whose free
/// K_{n-1} subgraphs are exactly `subgraphs` (m <= n - 2 of them). The
/// result has index n + 1 and exactly m + 1 free K_n subgraphs.
Configuration extend_one_more(const Configuration& config, const std::vector<FreeSubgraph>& subgraphs);

/// Labels of the fresh points extend_one_more adds, in the order P then X \ P.
std::vector<std::string> extension_labels(const Configuration& config);

/// Every admissible swap for a configuration whose only free K_n subgraphs
/// are `first` and `second`. Sorted; throws NoAdmissiblePair when empty.
std::vector<SwapCertificate> find_swap_candidates(const Configuration& config, const FreeSubgraph& first,
                                                  const FreeSubgraph& second);

/// Performs the swap and re-validates the result.
Configuration swap_kill(const Configuration& config, const SwapCertificate& cert);

}  // namespace psts
