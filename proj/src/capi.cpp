#include "goldgames.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "goldgames/distribution.hpp"
#include "goldgames/fragility.hpp"
#include "goldgames/game.hpp"
#include "goldgames/game_io.hpp"
#include "goldgames/montecarlo.hpp"
#include "goldgames/theory.hpp"
#include "goldgames/verify.hpp"

struct gg_game {
  gg::GameInstance impl;
};

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

template <typename Fn>
gg_status guarded(Fn&& fn) {
  try {
    fn();
    return GG_OK;
  } catch (const gg::ParseError& e) {
    set_error(e.what());
    return GG_ERR_PARSE;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return GG_ERR_INVALID_ARGUMENT;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return GG_ERR_TOO_LARGE;
  } catch (const std::exception& e) {
    set_error(e.what());
    return GG_ERR_IO;
  }
}

gg_status require(bool cond, const char* msg) {
  if (cond) return GG_OK;
  set_error(msg);
  return GG_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* gg_last_error(void) { return g_last_error.c_str(); }

double gg_phi(void) { return gg::phi(); }

gg_status gg_game_sample(uint32_t depth, double p, uint64_t seed,
                         uint64_t sample_index, gg_game** out) {
  if (gg_status s = require(out != nullptr, "out is null"); s != GG_OK) return s;
  return guarded([&] {
    *out = new gg_game{gg::sample_game({depth, p, seed, sample_index})};
  });
}

gg_status gg_game_from_bits(uint32_t depth, const uint8_t* bits, gg_game** out) {
  if (gg_status s = require(out && bits, "null argument"); s != GG_OK) return s;
  return guarded([&] {
    gg::GameInstance game(depth);
    for (uint64_t i = 0; i < game.leaf_count(); ++i) {
      if (bits[i] > 1) throw std::invalid_argument("payoff byte is not 0 or 1");
      game.set_leaf(i, bits[i] != 0);
    }
    *out = new gg_game{std::move(game)};
  });
}

gg_status gg_game_read_file(const char* path, gg_game** out) {
  if (gg_status s = require(path && out, "null argument"); s != GG_OK) return s;
  return guarded([&] { *out = new gg_game{gg::read_game_file(path)}; });
}

gg_status gg_game_write_file(const gg_game* game, const char* path, int binary) {
  if (gg_status s = require(game && path, "null argument"); s != GG_OK) return s;
  return guarded([&] { gg::write_game_file(game->impl, path, binary != 0); });
}

void gg_game_free(gg_game* game) { delete game; }

uint32_t gg_game_depth(const gg_game* game) { return game->impl.depth(); }

uint64_t gg_game_leaf_count(const gg_game* game) { return game->impl.leaf_count(); }

int gg_game_leaf(const gg_game* game, uint64_t leaf_index) {
  return game->impl.leaf(leaf_index) ? 1 : 0;
}

int gg_game_value(const gg_game* game) { return gg::value(game->impl); }

gg_status gg_game_cost_pair(const gg_game* game, uint64_t* cost_to_0,
                            uint64_t* cost_to_1) {
  if (gg_status s = require(game && cost_to_0 && cost_to_1, "null argument");
      s != GG_OK)
    return s;
  return guarded([&] {
    const gg::CostPair c = gg::cost_pair(game->impl);
    *cost_to_0 = c.to_zero;
    *cost_to_1 = c.to_one;
  });
}

uint64_t gg_game_fragility(const gg_game* game) {
  return gg::fragility(game->impl);
}

gg_status gg_game_witness(const gg_game* game, int* out_value,
                          uint64_t* witness_buf, uint64_t buf_len,
                          uint64_t* out_len) {
  if (gg_status s = require(game && out_value && out_len, "null argument");
      s != GG_OK)
    return s;
  return guarded([&] {
    const gg::FragilityReport rep = gg::witness(game->impl);
    if (rep.witness.size() > buf_len)
      throw std::invalid_argument("witness buffer too small; need " +
                                  std::to_string(rep.witness.size()));
    *out_value = rep.value;
    *out_len = rep.witness.size();
    std::copy(rep.witness.begin(), rep.witness.end(), witness_buf);
  });
}

gg_status gg_game_brute_force_fragility(const gg_game* game, uint64_t cap,
                                        uint64_t* out, int* out_over) {
  if (gg_status s = require(game && out && out_over, "null argument");
      s != GG_OK)
    return s;
  return guarded([&] {
    const auto res = gg::brute_force_fragility(game->impl, cap);
    *out_over = res ? 0 : 1;
    *out = res.value_or(0);
  });
}

int gg_leaf_payoff(uint32_t depth, double p, uint64_t seed,
                   uint64_t sample_index, uint64_t leaf_index) {
  return gg::leaf_payoff({depth, p, seed, sample_index}, leaf_index) ? 1 : 0;
}

int gg_value_streamed(uint32_t depth, double p, uint64_t seed,
                      uint64_t sample_index) {
  return gg::value_streamed({depth, p, seed, sample_index});
}

gg_status gg_exact_table(uint32_t depth, double p, uint32_t cap,
                         gg_exact_row* rows) {
  if (gg_status s = require(rows != nullptr, "rows is null"); s != GG_OK) return s;
  return guarded([&] {
    const auto table = gg::exact_table(static_cast<int>(depth), p,
                                       static_cast<int>(cap));
    for (const auto& src : table) {
      gg_exact_row& dst = rows[src.n];
      std::memset(&dst, 0, sizeof dst);
      dst.n = static_cast<uint32_t>(src.n);
      dst.prob_v1 = src.prob_v1;
      for (std::size_t d = 0; d < src.F.size(); ++d) {
        dst.F[d] = src.F[d];
        dst.alpha[d] = src.alpha[d];
        dst.beta[d] = src.beta[d];
      }
    }
  });
}

gg_status gg_value_prob_iterate(double p, uint32_t depth, double* probs) {
  if (gg_status s = require(probs != nullptr, "probs is null"); s != GG_OK)
    return s;
  return guarded([&] {
    const auto v = gg::value_prob_iterate(p, static_cast<int>(depth));
    std::copy(v.begin(), v.end(), probs);
  });
}

gg_status gg_theory_table(uint32_t dmax, gg_theory_row* rows) {
  if (gg_status s = require(rows != nullptr, "rows is null"); s != GG_OK) return s;
  if (gg_status s = require(dmax >= 1 && dmax <= GG_MAX_CAP, "dmax must be in [1, 16]");
      s != GG_OK)
    return s;
  return guarded([&] {
    const auto table = gg::xi_sequence(static_cast<int>(dmax));
    for (const auto& src : table) {
      gg_theory_row& dst = rows[src.d - 1];
      dst.d = static_cast<uint32_t>(src.d);
      dst.xi = src.xi;
      dst.xi_sq = src.xi_sq;
      dst.H = src.H;
      dst.F = src.F;
      dst.one_minus_F = src.complement;
    }
  });
}

gg_status gg_finite_alpha_beta(uint32_t dmax, uint32_t nmax, double* alpha,
                               double* beta) {
  if (gg_status s = require(alpha && beta, "null argument"); s != GG_OK) return s;
  return guarded([&] {
    const auto rows = gg::finite_alpha_beta(static_cast<int>(dmax),
                                            static_cast<int>(nmax));
    for (const auto& row : rows) {
      const std::size_t idx =
          static_cast<std::size_t>(row.n) * dmax + static_cast<std::size_t>(row.d - 1);
      alpha[idx] = row.alpha;
      beta[idx] = row.beta;
    }
  });
}

gg_status gg_mc_estimate(const gg_mc_request* req, gg_mc_result* out) {
  if (gg_status s = require(req && out, "null argument"); s != GG_OK) return s;
  return guarded([&] {
    const gg::EstimationResult res = gg::estimate(
        {req->depth, req->p, static_cast<int>(req->dmax), req->samples,
         req->seed, req->workers});
    std::memset(out, 0, sizeof *out);
    out->samples = res.samples;
    out->dmax = static_cast<uint32_t>(res.dmax);
    for (int v = 0; v < 2; ++v)
      for (int c = 1; c <= res.dmax + 1; ++c)
        out->counts[v][c - 1] = res.count(v, c);
    out->prob_v1 = {res.prob_v1.est, res.prob_v1.lo, res.prob_v1.hi};
    for (std::size_t d = 0; d < res.F.size(); ++d)
      out->F[d] = {res.F[d].est, res.F[d].lo, res.F[d].hi};
  });
}

gg_status gg_verify(uint32_t max_depth, uint64_t budget, char** out_report,
                    int* out_passed) {
  if (gg_status s = require(out_report && out_passed, "null argument");
      s != GG_OK)
    return s;
  return guarded([&] {
    const gg::VerifyResult res = gg::run_verification(max_depth, budget);
    char* buf = static_cast<char*>(std::malloc(res.report.size() + 1));
    if (!buf) throw std::bad_alloc();
    std::memcpy(buf, res.report.c_str(), res.report.size() + 1);
    *out_report = buf;
    *out_passed = res.passed ? 1 : 0;
  });
}

void gg_string_free(char* s) { std::free(s); }

}  // extern "C"
