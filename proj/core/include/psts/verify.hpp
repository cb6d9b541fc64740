#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "psts/analysis.hpp"
#include "psts/configuration.hpp"
#include "psts/constructions.hpp"
#include "psts/isomorphism.hpp"

namespace psts {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed0f5715ULL;

/// Largest point count on which the exhaustive subset oracle is run.
inline constexpr std::size_t kOracleCeiling = 21;

enum class Origin { Grassmannian, Veronesian, Perspective, Attach, TwoGraph, Census, Extend, Swap };

std::string_view origin_name(Origin origin) noexcept;

struct CorpusEntry {
  std::string provenance;
  Origin origin = Origin::Grassmannian;
  Configuration configuration;
  std::size_t index = 0;           // binomial index n + 1
  std::size_t subgraph_count = 0;  // free K_n, n = index - 1
  /// Vertex label sets the recipe guarantees to be free K_n subgraphs. For
  /// transform outputs this is the complete expected enumeration.
  std::vector<std::vector<std::string>> designated;
  /// Corpus position of the input, for transform outputs.
  std::optional<std::size_t> parent;
  /// Rebuilds the configuration from the recipe.
  std::function<Configuration()> replay;

  std::size_t order() const noexcept { return index - 1; }
};

/// Makes an entry, computing index and subgraph count.
CorpusEntry make_entry(std::string provenance, Origin origin, std::function<Configuration()> replay);

/// Grassmannians, Veronesians, random perspective systems, attachments,
/// two-graph examples, census representatives, and extend/swap outputs,
/// all of binomial index at most n_max + 1.
std::vector<CorpusEntry> build_corpus(std::size_t n_max, std::uint64_t seed = kDefaultSeed);

struct PropertyResult {
  std::string property;
  std::size_t entries = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_details;

  bool passed() const noexcept { return failures == 0; }
};

struct BatteryReport {
  std::size_t n_max = 0;
  std::uint64_t seed = 0;
  std::size_t corpus_size = 0;
  std::vector<PropertyResult> properties;

  bool passed() const noexcept;
  const PropertyResult* find(std::string_view property) const;
};

/// Checks every invariant over build_corpus(n_max, seed). Failures are
/// collected, not thrown; see require_passed.
BatteryReport run_property_battery(std::size_t n_max, std::uint64_t seed = kDefaultSeed);
BatteryReport run_property_battery(const std::vector<CorpusEntry>& corpus, std::size_t n_max, std::uint64_t seed);

/// Throws PropertyFailure naming the first failing property.
void require_passed(const BatteryReport& report);

struct ExistenceWitness {
  std::size_t n = 0;
  std::size_t m = 0;
  CorpusEntry entry;
  std::size_t oracle_count = 0;
};

/// One witness per m in {0..n-1} u {n+1}, 4 <= n <= 6, each with an exact
/// count confirmed by the subset oracle. Ordered by m.
std::vector<ExistenceWitness> build_existence_corpus(std::size_t n);

std::vector<std::size_t> admissible_counts(std::size_t n);

struct CensusClass {
  CanonicalForm form;
  std::size_t free_k4 = 0;
  /// How many of the 720 labellings land in this class.
  std::size_t labellings = 0;
  Labelling representative;
  Configuration configuration;
  bool is_grassmannian = false;
  bool is_veronesian = false;
};

struct CensusReport {
  std::vector<CensusClass> classes;  // by (free_k4, certificate)
  std::set<std::size_t> counts;
};

/// Attaches K_4 to the Veblen configuration along all 720 labellings and
/// groups the results by isomorphism class. Throws PropertyFailure when the
/// achievable counts differ from {1,2,3,5} or the count-5 class is not G(5,2).
CensusReport classify_veblen_labellings();

/// The labelling C_2(X) -> Veblen for which the census uses X = x1..x4.
std::vector<std::string> census_vertices();

// Random inputs for the constructions.
Labelling random_labelling(const std::vector<std::string>& vertices, const Configuration& target,
                           std::mt19937_64& rng);
/// Axis grassmannian(n-m+1), or a single point when n - m + 1 = 2.
PerspectiveData random_perspective_data(std::size_t n, std::size_t m, std::mt19937_64& rng);

}  // namespace psts
