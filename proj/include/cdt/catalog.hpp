#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdt/graph.hpp"

namespace cdt {

/// The twelve cubic distance-transitive graphs, in table order.
enum class CdtName {
  K4,
  K33,
  Q3,
  Petersen,
  Heawood,
  Pappus,
  Dodecahedral,
  Desargues,
  Coxeter,
  Tutte,
  Foster,
  BiggsSmith,
};

inline constexpr std::array<CdtName, 12> kAllCdt = {
    CdtName::K4,           CdtName::K33,       CdtName::Q3,      CdtName::Petersen,
    CdtName::Heawood,      CdtName::Pappus,    CdtName::Dodecahedral, CdtName::Desargues,
    CdtName::Coxeter,      CdtName::Tutte,     CdtName::Foster,  CdtName::BiggsSmith,
};

/// Lower-case command-line token, e.g. "biggs-smith".
std::string_view cdt_token(CdtName name);
/// Display name, e.g. "Biggs-Smith graph".
std::string_view cdt_display_name(CdtName name);
/// Case-insensitive; accepts tokens and a few aliases ("k3,3", "cube", "dodecahedron").
std::optional<CdtName> parse_cdt_name(std::string_view text);

struct CdtParameters {
  int n = 0;        // order
  int d = 0;        // diameter
  int g = 0;        // girth
  int k = 0;        // arc-transitivity
  int eta = 0;      // number of girth cycles
  long a = 0;       // automorphism group order
  bool b = false;   // bipartite
  bool h = false;   // hamiltonian
  int kappa = 0;    // 0..3

  friend bool operator==(const CdtParameters&, const CdtParameters&) = default;
};

CdtParameters cdt_parameters(CdtName name);

/// Bijection between printed vertex labels ("u3", "4_2", "c") and dense ids.
class LabelTable {
 public:
  LabelTable() = default;
  explicit LabelTable(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(Vertex v) const { return labels_.at(static_cast<std::size_t>(v)); }
  std::optional<Vertex> id(std::string_view label) const;
  /// Id of a label that must exist; throws std::out_of_range otherwise.
  Vertex at(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  std::vector<std::string> labels_;
  std::map<std::string, Vertex, std::less<>> index_;
};

struct CdtGraph {
  Graph graph;
  LabelTable labels;
};

CdtGraph build_cdt(CdtName name);

/// Oriented girth cycles as listed in the literature for the seven positive
/// cases. A cycle whose printed listing is defective is kept in `partial`
/// with its printed vertices; it is completed by the orientation solver.
struct OocFixture {
  std::vector<std::vector<Vertex>> cycles;
  struct Partial {
    std::string name;
    std::vector<Vertex> printed;
  };
  std::vector<Partial> partial;
};

std::optional<OocFixture> reference_ooc(CdtName name);

}  // namespace cdt
