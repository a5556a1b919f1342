// Command-line front end for the golden-games shared library. Talks to the
// core exclusively through the C API in goldgames.h.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "goldgames.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;

[[noreturn]] void die(int code, const std::string& msg) {
  std::cerr << "golden-games: " << msg << '\n';
  std::exit(code);
}

[[noreturn]] void die_status(gg_status s) {
  const int code = s == GG_ERR_INVALID_ARGUMENT ? kExitUsage : kExitIo;
  die(code, gg_last_error());
}

double parse_p(const std::string& text) {
  if (text == "golden") return gg_phi();
  try {
    std::size_t pos = 0;
    const double v = std::stod(text, &pos);
    if (pos != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    die(kExitUsage, "--p expects a number or 'golden', got '" + text + "'");
  }
}

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// stdout unless --out was given
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) die(kExitIo, "cannot open " + path + " for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

unsigned default_workers() {
  if (const char* env = std::getenv("GOLDEN_GAMES_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

void emit_exact_csv(std::ostream& out, const std::vector<gg_exact_row>& rows,
                    double p, uint32_t cap, bool all_n) {
  out << "n,p,cap,prob_v1";
  for (uint32_t d = 1; d <= cap; ++d) out << ",F_" << d;
  for (uint32_t d = 1; d <= cap; ++d) out << ",alpha_" << d;
  for (uint32_t d = 1; d <= cap; ++d) out << ",beta_" << d;
  out << '\n';
  const std::size_t first = all_n ? 0 : rows.size() - 1;
  for (std::size_t i = first; i < rows.size(); ++i) {
    const gg_exact_row& r = rows[i];
    out << r.n << ',' << fmt17(p) << ',' << cap << ',' << fmt17(r.prob_v1);
    for (uint32_t d = 0; d < cap; ++d) out << ',' << fmt17(r.F[d]);
    for (uint32_t d = 0; d < cap; ++d) out << ',' << fmt17(r.alpha[d]);
    for (uint32_t d = 0; d < cap; ++d) out << ',' << fmt17(r.beta[d]);
    out << '\n';
  }
}

nlohmann::json exact_row_json(const gg_exact_row& r, uint32_t cap) {
  nlohmann::json j;
  j["n"] = r.n;
  j["prob_v1"] = r.prob_v1;
  for (uint32_t d = 0; d < cap; ++d) {
    j["F"].push_back(r.F[d]);
    j["alpha"].push_back(r.alpha[d]);
    j["beta"].push_back(r.beta[d]);
  }
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and Monte Carlo fragility analysis of random "
               "alternating-move win-lose games on complete binary trees"};
  app.require_subcommand(1);

  // sample
  auto* sample = app.add_subcommand("sample", "Sample a game and write it to a file");
  uint32_t s_depth = 0;
  std::string s_p = "golden";
  uint64_t s_seed = 0, s_index = 0;
  std::string s_out;
  bool s_binary = false;
  sample->add_option("--depth", s_depth)->required();
  sample->add_option("--p", s_p);
  sample->add_option("--seed", s_seed);
  sample->add_option("--index", s_index);
  sample->add_option("--out", s_out);
  sample->add_flag("--binary", s_binary);

  // eval
  auto* eval = app.add_subcommand("eval", "Value, fragility and witness of a game file");
  std::string e_file;
  eval->add_option("file", e_file)->required();

  // exact
  auto* exact = app.add_subcommand("exact", "Exact F_n(d), alpha, beta by distribution DP");
  uint32_t x_depth = 0, x_dmax = 1;
  std::string x_p = "golden", x_out, x_format = "csv";
  bool x_all = false;
  exact->add_option("--depth", x_depth)->required();
  exact->add_option("--p", x_p);
  exact->add_option("--dmax", x_dmax);
  exact->add_flag("--all-n", x_all);
  exact->add_option("--out", x_out);
  exact->add_option("--format", x_format)->check(CLI::IsMember({"csv", "json"}));

  // theory
  auto* theory = app.add_subcommand("theory", "Asymptotic xi_d, H(d), F(d) recursion");
  uint32_t t_dmax = 5;
  std::string t_out, t_format = "csv";
  theory->add_option("--dmax", t_dmax);
  theory->add_option("--out", t_out);
  theory->add_option("--format", t_format)->check(CLI::IsMember({"csv", "json"}));

  // mc
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimation with Wilson intervals");
  uint32_t m_depth = 0, m_dmax = 1, m_workers = default_workers();
  std::string m_p = "golden", m_out;
  uint64_t m_samples = 0, m_seed = 0;
  mc->add_option("--depth", m_depth)->required();
  mc->add_option("--p", m_p);
  mc->add_option("--dmax", m_dmax);
  mc->add_option("--samples", m_samples)->required();
  mc->add_option("--seed", m_seed);
  mc->add_option("--workers", m_workers);
  mc->add_option("--out", m_out);

  // verify
  auto* verify = app.add_subcommand("verify", "Run the cross-oracle verification suites");
  uint32_t v_depth = 3;
  uint64_t v_budget = 8;
  verify->add_option("--max-depth", v_depth)->check(CLI::Range(0u, 4u));
  verify->add_option("--budget", v_budget);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (sample->parsed()) {
    gg_game* game = nullptr;
    if (gg_status s = gg_game_sample(s_depth, parse_p(s_p), s_seed, s_index, &game);
        s != GG_OK)
      die_status(s);
    if (s_out.empty()) die(kExitUsage, "sample requires --out FILE");
    if (gg_status s = gg_game_write_file(game, s_out.c_str(), s_binary ? 1 : 0);
        s != GG_OK)
      die_status(s);
    gg_game_free(game);
    return kExitOk;
  }

  if (eval->parsed()) {
    gg_game* game = nullptr;
    if (gg_status s = gg_game_read_file(e_file.c_str(), &game); s != GG_OK)
      die_status(s);
    const uint64_t frag = gg_game_fragility(game);
    std::vector<uint64_t> buf(frag);
    int value = 0;
    uint64_t len = 0;
    if (gg_status s = gg_game_witness(game, &value, buf.data(), buf.size(), &len);
        s != GG_OK)
      die_status(s);
    gg_game_free(game);
    nlohmann::json j;
    j["value"] = value;
    j["fragility"] = frag;
    j["witness"] = std::vector<uint64_t>(buf.begin(), buf.begin() + len);
    std::cout << j.dump() << '\n';
    return kExitOk;
  }

  if (exact->parsed()) {
    const double p = parse_p(x_p);
    std::vector<gg_exact_row> rows(x_depth + 1);
    if (gg_status s = gg_exact_table(x_depth, p, x_dmax, rows.data()); s != GG_OK)
      die_status(s);
    Output out(x_out);
    if (x_format == "csv") {
      emit_exact_csv(out.stream(), rows, p, x_dmax, x_all);
    } else {
      nlohmann::json j = nlohmann::json::array();
      for (std::size_t i = x_all ? 0 : rows.size() - 1; i < rows.size(); ++i)
        j.push_back(exact_row_json(rows[i], x_dmax));
      out.stream() << j.dump() << '\n';
    }
    return kExitOk;
  }

  if (theory->parsed()) {
    std::vector<gg_theory_row> rows(t_dmax);
    if (gg_status s = gg_theory_table(t_dmax, rows.data()); s != GG_OK)
      die_status(s);
    Output out(t_out);
    if (t_format == "csv") {
      out.stream() << "d,xi,xi_sq,H,F,one_minus_F\n";
      for (const auto& r : rows)
        out.stream() << r.d << ',' << fmt17(r.xi) << ',' << fmt17(r.xi_sq) << ','
                     << fmt17(r.H) << ',' << fmt17(r.F) << ','
                     << fmt17(r.one_minus_F) << '\n';
    } else {
      nlohmann::json j = nlohmann::json::array();
      for (const auto& r : rows)
        j.push_back({{"d", r.d}, {"xi", r.xi}, {"xi_sq", r.xi_sq}, {"H", r.H},
                     {"F", r.F}, {"one_minus_F", r.one_minus_F}});
      out.stream() << j.dump() << '\n';
    }
    return kExitOk;
  }

  if (mc->parsed()) {
    const gg_mc_request req{m_depth, parse_p(m_p), m_dmax, m_samples, m_seed,
                            m_workers};
    gg_mc_result res;
    if (gg_status s = gg_mc_estimate(&req, &res); s != GG_OK) die_status(s);
    nlohmann::json j;
    j["depth"] = m_depth;
    j["p"] = req.p;
    j["dmax"] = m_dmax;
    j["samples"] = m_samples;
    j["seed"] = m_seed;
    j["prob_v1"] = {{"est", res.prob_v1.est}, {"lo", res.prob_v1.lo},
                    {"hi", res.prob_v1.hi}};
    j["F"] = nlohmann::json::array();
    for (uint32_t d = 1; d <= m_dmax; ++d)
      j["F"].push_back({{"d", d}, {"est", res.F[d - 1].est},
                        {"lo", res.F[d - 1].lo}, {"hi", res.F[d - 1].hi}});
    Output out(m_out);
    out.stream() << j.dump() << '\n';
    return kExitOk;
  }

  if (verify->parsed()) {
    char* report = nullptr;
    int passed = 0;
    if (gg_status s = gg_verify(v_depth, v_budget, &report, &passed); s != GG_OK)
      die_status(s);
    std::cout << report;
    gg_string_free(report);
    return passed ? kExitOk : kExitVerifyFailed;
  }

  return kExitUsage;
}
