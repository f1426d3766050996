#include "cdt/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace cdt {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

std::string digit_label(int value) {
  static constexpr std::string_view kDigits = "0123456789abcdefghijklmnopqrstuvwxyz";
  return std::string(1, kDigits.at(static_cast<std::size_t>(value)));
}

std::string sub_label(int x, int i) { return std::to_string(x) + "_" + std::to_string(i); }

/// Graph on `n` vertices whose edges are given as label pairs.
class Builder {
 public:
  explicit Builder(std::vector<std::string> labels) : table_(std::move(labels)) {}

  void edge(std::string_view a, std::string_view b) { edges_.push_back({table_.at(a), table_.at(b)}); }
  void edge(Vertex a, Vertex b) { edges_.push_back({a, b}); }

  CdtGraph finish() && {
    Graph g = Graph::build(static_cast<int>(table_.size()), edges_);
    return CdtGraph{std::move(g), std::move(table_)};
  }

  const LabelTable& table() const { return table_; }

 private:
  LabelTable table_;
  std::vector<Edge> edges_;
};

std::vector<std::string> range_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(digit_label(i));
  return out;
}

std::vector<std::string> lettered(std::string_view letters, int count,
                                  const std::function<std::string(int)>& index = {}) {
  std::vector<std::string> out;
  for (char c : letters)
    for (int i = 0; i < count; ++i)
      out.push_back(std::string(1, c) + (index ? index(i) : std::to_string(i)));
  return out;
}

std::vector<std::string> subscripted(int blocks, int width) {
  std::vector<std::string> out;
  for (int x = 0; x < blocks; ++x)
    for (int i = 0; i < width; ++i) out.push_back(sub_label(x, i));
  return out;
}

// I_n plus chords (a + step*x, b + step*x), vertices labelled by digits.
CdtGraph circulant_with_chords(int n, std::initializer_list<std::pair<int, int>> chords, int step,
                               int repeats) {
  Builder b(range_labels(n));
  for (int i = 0; i < n; ++i) b.edge(i, (i + 1) % n);
  for (int x = 0; x < repeats; ++x)
    for (auto [p, q] : chords) b.edge(mod(p + step * x, n), mod(q + step * x, n));
  return std::move(b).finish();
}

CdtGraph build_k4() {
  Builder b(range_labels(4));
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) b.edge(u, v);
  return std::move(b).finish();
}

// K6 on {0..5} minus the triangles (1,3,5) and (2,4,0).
CdtGraph build_k33() {
  Builder b(range_labels(6));
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if ((u + v) % 2 == 1) b.edge(u, v);
  return std::move(b).finish();
}

CdtGraph build_q3() {
  Builder b(range_labels(8));
  for (auto [u, v] : {std::pair{0, 1}, {2, 3}, {4, 5}, {6, 7}, {0, 2}, {1, 3}, {4, 6}, {5, 7},
                      {0, 4}, {1, 5}, {2, 6}, {3, 7}})
    b.edge(u, v);
  return std::move(b).finish();
}

// Outer 5-cycle (u0..u4), inner pentagram v_x ~ v_{x+2}, spokes u_x v_x.
CdtGraph build_petersen() {
  Builder b(lettered("uv", 5));
  auto u = [](int x) { return "u" + std::to_string(mod(x, 5)); };
  auto v = [](int x) { return "v" + std::to_string(mod(x, 5)); };
  for (int x = 0; x < 5; ++x) {
    b.edge(u(x), u(x + 1));
    b.edge(v(x), v(x + 2));
    b.edge(u(x), v(x));
  }
  return std::move(b).finish();
}

CdtGraph build_heawood() { return circulant_with_chords(14, {{0, 5}}, 2, 7); }

CdtGraph build_pappus() {
  return circulant_with_chords(18, {{1, 6}, {2, 9}, {4, 11}}, 6, 3);
}

// Double cover of Petersen: a_x, c_x over u_x and b_x, d_x over v_x.
CdtGraph build_dodecahedral() {
  Builder b(lettered("abcd", 5));
  auto at = [](char c, int x) { return std::string(1, c) + std::to_string(mod(x, 5)); };
  for (int x = 0; x < 5; ++x) {
    b.edge(at('a', x), at('a', x + 1));
    b.edge(at('c', x), at('c', x + 1));
    b.edge(at('a', x), at('d', x));
    b.edge(at('b', x), at('d', x + 2));
    b.edge(at('b', x), at('d', x - 2));
    b.edge(at('b', x), at('c', x));
  }
  return std::move(b).finish();
}

// I_20 with x_i = 4x+i, plus (x_3, (x+2)_0) and (x_1, (x+2)_2).
CdtGraph build_desargues() {
  Builder b(subscripted(5, 4));
  for (int i = 0; i < 20; ++i) b.edge(i, (i + 1) % 20);
  for (int x = 0; x < 5; ++x) {
    b.edge(sub_label(x, 3), sub_label(mod(x + 2, 5), 0));
    b.edge(sub_label(x, 1), sub_label(mod(x + 2, 5), 2));
  }
  return std::move(b).finish();
}

// Three 7-cycles u_x~u_{x+1}, v_x~v_{x+2}, t_x~t_{x+3} joined by claws at z_x.
CdtGraph build_coxeter() {
  Builder b(lettered("uvtz", 7));
  auto at = [](char c, int x) { return std::string(1, c) + std::to_string(mod(x, 7)); };
  for (int x = 0; x < 7; ++x) {
    b.edge(at('u', x), at('u', x + 1));
    b.edge(at('v', x), at('v', x + 2));
    b.edge(at('t', x), at('t', x + 3));
    b.edge(at('z', x), at('u', x));
    b.edge(at('z', x), at('v', x));
    b.edge(at('z', x), at('t', x));
  }
  return std::move(b).finish();
}

// I_30 with x_i = 6x+i, plus (x_5,(x+2)_0), (x_1,(x+1)_4), (x_2,(x+2)_3).
CdtGraph build_tutte() {
  Builder b(subscripted(5, 6));
  for (int i = 0; i < 30; ++i) b.edge(i, (i + 1) % 30);
  for (int x = 0; x < 5; ++x) {
    b.edge(sub_label(x, 5), sub_label(mod(x + 2, 5), 0));
    b.edge(sub_label(x, 1), sub_label(mod(x + 1, 5), 4));
    b.edge(sub_label(x, 2), sub_label(mod(x + 2, 5), 3));
  }
  return std::move(b).finish();
}

// I_90 with x_i = 6x+i, plus (x_4,(x+2)_1), (x_0,(x+2)_5), (x_2,(x+6)_3).
CdtGraph build_foster() {
  Builder b(subscripted(15, 6));
  for (int i = 0; i < 90; ++i) b.edge(i, (i + 1) % 90);
  for (int x = 0; x < 15; ++x) {
    b.edge(sub_label(x, 4), sub_label(mod(x + 2, 15), 1));
    b.edge(sub_label(x, 0), sub_label(mod(x + 2, 15), 5));
    b.edge(sub_label(x, 2), sub_label(mod(x + 6, 15), 3));
  }
  return std::move(b).finish();
}

// 17-cycles A, D, C, F with steps 1, 2, 4, 8, and trees A_i B_i C_i, D_i E_i F_i, B_i E_i.
CdtGraph build_biggs_smith() {
  Builder b(lettered("ABCDEF", 17, digit_label));
  auto at = [](char c, int i) { return std::string(1, c) + digit_label(mod(i, 17)); };
  for (int i = 0; i < 17; ++i) {
    b.edge(at('A', i), at('A', i + 1));
    b.edge(at('D', i), at('D', i + 2));
    b.edge(at('C', i), at('C', i + 4));
    b.edge(at('F', i), at('F', i + 8));
    b.edge(at('A', i), at('B', i));
    b.edge(at('B', i), at('C', i));
    b.edge(at('D', i), at('E', i));
    b.edge(at('E', i), at('F', i));
    b.edge(at('B', i), at('E', i));
  }
  return std::move(b).finish();
}

std::vector<Vertex> parse_cycle(const LabelTable& table, std::string_view text) {
  std::vector<Vertex> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) out.push_back(table.at(token));
  return out;
}

// Shifts the block index x of every "x_i" label by `shift` modulo `blocks`.
std::string translate_sub(std::string_view cycle, int shift, int blocks) {
  std::istringstream in{std::string(cycle)};
  std::string token, out;
  while (in >> token) {
    auto bar = token.find('_');
    int x = std::stoi(token.substr(0, bar));
    if (!out.empty()) out += ' ';
    out += sub_label(mod(x + shift, blocks), std::stoi(token.substr(bar + 1)));
  }
  return out;
}

OocFixture fixture_from(const LabelTable& table, std::initializer_list<std::string_view> cycles) {
  OocFixture f;
  for (auto c : cycles) f.cycles.push_back(parse_cycle(table, c));
  return f;
}

OocFixture desargues_fixture(const LabelTable& table) {
  // A^x, B^x, C^x, D^x written for x = 0; the rest by x -> x + y.
  static constexpr std::string_view kBase[] = {
      "0_0 0_1 0_2 0_3 1_0 4_3",
      "0_1 0_0 4_3 4_2 2_1 2_2",
      "0_2 0_1 0_0 3_3 3_2 3_1",
      "0_0 4_3 1_0 1_1 3_2 3_3",
  };
  OocFixture f;
  for (auto base : kBase)
    for (int y = 0; y < 5; ++y) f.cycles.push_back(parse_cycle(table, translate_sub(base, y, 5)));
  return f;
}

OocFixture tutte_fixture(const LabelTable& table) {
  static constexpr std::string_view kBase[] = {
      "4_5 0_0 0_1 0_2 0_3 0_4 0_5 1_0",  // A
      "4_2 4_3 4_4 4_5 1_0 1_1 1_2 1_3",  // B
      "0_2 0_3 0_4 4_1 4_0 2_5 2_4 2_3",  // C
      "3_3 3_2 3_1 4_4 4_3 4_2 1_3 1_2",  // D
      "4_5 1_0 0_5 0_4 4_1 4_0 3_5 0_0",  // E
      "4_5 0_0 3_5 4_0 2_5 2_4 1_1 1_0",  // F
      "1_0 1_1 2_4 2_3 0_2 0_1 0_0 4_5",  // G
      "2_3 2_4 1_1 1_0 0_5 0_4 0_3 0_2",  // H
      "0_1 0_2 0_3 0_4 4_1 4_2 1_3 1_4",  // I
      "1_0 0_5 0_4 0_3 3_2 3_1 4_4 4_5",  // J
      "3_1 3_2 0_3 0_2 0_1 0_0 4_5 4_4",  // K
      "2_3 2_4 2_5 3_0 3_1 3_2 0_3 0_2",  // L
      "3_5 4_0 4_1 0_4 0_3 0_2 0_1 0_0",  // M
      "0_0 0_1 1_4 1_5 2_0 2_1 3_4 3_5",  // N
      "4_2 4_3 2_2 2_1 3_4 3_3 1_2 1_3",  // O
      "4_5 4_4 4_3 4_2 4_1 0_4 0_5 1_0",  // P
      "4_0 4_1 4_2 1_3 1_4 1_5 3_0 2_5",  // Q
      "0_1 0_2 0_3 3_2 3_1 3_0 1_5 1_4",  // R
  };
  OocFixture f;
  for (auto base : kBase)
    for (int y = 0; y < 5; ++y) f.cycles.push_back(parse_cycle(table, translate_sub(base, y, 5)));
  return f;
}

OocFixture dodecahedral_fixture(const LabelTable& table) {
  auto at = [&](char c, int x) { return table.at(std::string(1, c) + std::to_string(mod(x, 5))); };
  OocFixture f;
  f.cycles.push_back({at('a', 0), at('a', 1), at('a', 2), at('a', 3), at('a', 4)});
  f.cycles.push_back({at('c', 4), at('c', 3), at('c', 2), at('c', 1), at('c', 0)});
  for (int x = 0; x < 5; ++x) {
    f.cycles.push_back({at('a', x), at('d', x), at('b', x - 2), at('d', x + 1), at('a', x + 1)});
    f.cycles.push_back({at('d', x), at('b', x + 2), at('c', x + 2), at('c', x - 2), at('b', x - 2)});
  }
  return f;
}

struct NamedCycle {
  std::string_view name;
  std::string_view vertices;
};

// Printed listing, including the two defective entries: 3^3 steps from u2 to
// v3 (not adjacent) and 4^3 names only six vertices.
constexpr NamedCycle kCoxeterCycles[] = {
    {"0^1", "u1 u2 u3 u4 u5 u6 u0"}, {"0^2", "v1 v3 v5 v0 v2 v4 v6"},
    {"0^3", "t1 t5 t2 t6 t3 t0 t4"}, {"1^1", "u1 z1 v1 v3 z3 u3 u2"},
    {"1^2", "z4 v4 v2 v0 z0 t0 t4"}, {"1^3", "t6 t2 t5 z5 u5 u6 z6"},
    {"2^1", "v5 z5 u5 u4 u3 z3 v3"}, {"2^2", "t6 z6 v6 v4 v2 z2 t2"},
    {"2^3", "u1 z1 t1 t4 t0 z0 u0"}, {"3^1", "v5 v0 z0 u0 u6 u5 z5"},
    {"3^2", "z4 t4 t1 z1 v1 v6 v4"}, {"3^3", "t6 t2 z2 u2 v3 z3 t3"},
    {"4^1", "u1 u0 z0 v0 v2 z2 u2"}, {"4^2", "t6 t3 z3 v3 v1 v6 z6"},
    {"4^3", "z4 u4 u5 z5 t5 t4"},    {"5^1", "z4 u4 u3 u2 z2 v2 v4"},
    {"5^2", "v5 v3 v1 z1 t1 t5 z5"}, {"5^3", "t6 z6 u6 u0 z0 t0 t3"},
    {"6^1", "z4 v4 v6 z6 u6 u5 u4"}, {"6^2", "v5 v3 z3 t3 t0 z0 v0"},
    {"6^3", "u1 u2 z2 t2 t5 t1 z1"}, {"7^1", "u1 u0 u6 z6 v6 v1 z1"},
    {"7^2", "v5 z5 t5 t2 z2 v2 v0"}, {"7^3", "z4 t4 t0 t3 z3 u3 u4"},
};

bool is_closed_cycle(const Graph& g, const std::vector<Vertex>& cycle, int length) {
  if (static_cast<int>(cycle.size()) != length) return false;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.adjacent(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
  return true;
}

OocFixture coxeter_fixture(const CdtGraph& cox) {
  OocFixture f;
  for (const auto& [name, vertices] : kCoxeterCycles) {
    auto cycle = parse_cycle(cox.labels, vertices);
    if (is_closed_cycle(cox.graph, cycle, 7))
      f.cycles.push_back(std::move(cycle));
    else
      f.partial.push_back({std::string(name), std::move(cycle)});
  }
  return f;
}

}  // namespace

LabelTable::LabelTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Vertex>(i)).second)
      throw std::invalid_argument("duplicate label " + labels_[i]);
  }
}

std::optional<Vertex> LabelTable::id(std::string_view label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex LabelTable::at(std::string_view label) const {
  if (auto v = id(label)) return *v;
  throw std::out_of_range("unknown vertex label " + std::string(label));
}

std::string_view cdt_token(CdtName name) {
  switch (name) {
    case CdtName::K4: return "k4";
    case CdtName::K33: return "k33";
    case CdtName::Q3: return "q3";
    case CdtName::Petersen: return "petersen";
    case CdtName::Heawood: return "heawood";
    case CdtName::Pappus: return "pappus";
    case CdtName::Dodecahedral: return "dodecahedral";
    case CdtName::Desargues: return "desargues";
    case CdtName::Coxeter: return "coxeter";
    case CdtName::Tutte: return "tutte";
    case CdtName::Foster: return "foster";
    case CdtName::BiggsSmith: return "biggs-smith";
  }
  return "?";
}

std::string_view cdt_display_name(CdtName name) {
  switch (name) {
    case CdtName::K4: return "Tetrahedral graph K4";
    case CdtName::K33: return "Thomsen graph K3,3";
    case CdtName::Q3: return "3-cube graph Q3";
    case CdtName::Petersen: return "Petersen graph";
    case CdtName::Heawood: return "Heawood graph";
    case CdtName::Pappus: return "Pappus graph";
    case CdtName::Dodecahedral: return "Dodecahedral graph";
    case CdtName::Desargues: return "Desargues graph";
    case CdtName::Coxeter: return "Coxeter graph";
    case CdtName::Tutte: return "Tutte 8-cage";
    case CdtName::Foster: return "Foster graph";
    case CdtName::BiggsSmith: return "Biggs-Smith graph";
  }
  return "?";
}

std::optional<CdtName> parse_cdt_name(std::string_view text) {
  std::string key;
  for (char c : text)
    if (std::isalnum(static_cast<unsigned char>(c)))
      key += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (CdtName n : kAllCdt) {
    std::string token;
    for (char c : cdt_token(n))
      if (std::isalnum(static_cast<unsigned char>(c))) token += c;
    if (key == token) return n;
    std::string display;
    for (char c : cdt_display_name(n))
      if (std::isalnum(static_cast<unsigned char>(c)))
        display += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (key == display) return n;
  }
  static const std::map<std::string, CdtName> kAliases = {
      {"tetrahedral", CdtName::K4},   {"tetrahedron", CdtName::K4},
      {"thomsen", CdtName::K33},      {"utility", CdtName::K33},
      {"cube", CdtName::Q3},          {"3cube", CdtName::Q3},
      {"dodecahedron", CdtName::Dodecahedral},
      {"tutte8cage", CdtName::Tutte}, {"biggs", CdtName::BiggsSmith},
  };
  if (auto it = kAliases.find(key); it != kAliases.end()) return it->second;
  return std::nullopt;
}

CdtParameters cdt_parameters(CdtName name) {
  //                  n  d   g  k    eta     a   b     h   kappa
  switch (name) {
    case CdtName::K4: return {4, 1, 3, 2, 4, 24, false, true, 1};
    case CdtName::K33: return {6, 2, 4, 3, 9, 72, true, true, 2};
    case CdtName::Q3: return {8, 3, 4, 2, 6, 48, true, true, 1};
    case CdtName::Petersen: return {10, 2, 5, 3, 12, 120, false, false, 0};
    case CdtName::Heawood: return {14, 3, 6, 4, 28, 336, true, true, 0};
    case CdtName::Pappus: return {18, 4, 6, 3, 18, 216, true, true, 0};
    case CdtName::Dodecahedral: return {20, 5, 5, 2, 12, 120, false, true, 1};
    case CdtName::Desargues: return {20, 5, 6, 3, 20, 240, true, true, 3};
    case CdtName::Coxeter: return {28, 4, 7, 3, 24, 336, false, false, 3};
    case CdtName::Tutte: return {30, 4, 8, 5, 90, 1440, true, true, 2};
    case CdtName::Foster: return {90, 8, 10, 5, 216, 4320, true, true, 0};
    case CdtName::BiggsSmith: return {102, 7, 9, 4, 136, 2448, false, true, 0};
  }
  throw std::invalid_argument("unknown CDT name");
}

CdtGraph build_cdt(CdtName name) {
  switch (name) {
    case CdtName::K4: return build_k4();
    case CdtName::K33: return build_k33();
    case CdtName::Q3: return build_q3();
    case CdtName::Petersen: return build_petersen();
    case CdtName::Heawood: return build_heawood();
    case CdtName::Pappus: return build_pappus();
    case CdtName::Dodecahedral: return build_dodecahedral();
    case CdtName::Desargues: return build_desargues();
    case CdtName::Coxeter: return build_coxeter();
    case CdtName::Tutte: return build_tutte();
    case CdtName::Foster: return build_foster();
    case CdtName::BiggsSmith: return build_biggs_smith();
  }
  throw std::invalid_argument("unknown CDT name");
}

std::optional<OocFixture> reference_ooc(CdtName name) {
  CdtGraph g = build_cdt(name);
  switch (name) {
    case CdtName::K4:
      return fixture_from(g.labels, {"1 2 3", "2 1 0", "3 0 1", "0 3 2"});
    case CdtName::K33:
      return fixture_from(g.labels, {"1 2 3 4", "3 2 1 0", "4 3 2 5", "1 4 3 0", "2 1 4 5",
                                     "0 1 2 5", "5 2 3 0", "0 3 4 5", "5 4 1 0"});
    case CdtName::Q3:
      return fixture_from(g.labels,
                          {"0 1 3 2", "1 0 4 5", "3 1 5 7", "2 3 7 6", "0 2 6 4", "4 6 7 5"});
    case CdtName::Dodecahedral: return dodecahedral_fixture(g.labels);
    case CdtName::Desargues: return desargues_fixture(g.labels);
    case CdtName::Coxeter: return coxeter_fixture(g);
    case CdtName::Tutte: return tutte_fixture(g.labels);
    default: return std::nullopt;
  }
}

}  // namespace cdt
