/* Copyright 2026 The sigwind Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// sigwind: signatures, moments, interpolation and winding numbers of polylines.
//
// Exit codes: 0 certified result, 2 uncertified result (--force or no bound),
// 1 input error, 3 certificate failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "io.hpp"

namespace cli = sigwind::cli;

namespace {

template <class T>
void copy_if_set(const CLI::Option* opt, const T& value, std::optional<T>& dst) {
  if (opt->count() > 0) dst = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Path signatures, Stieltjes moments, binomial interpolation and certified winding numbers"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "sigwind 0.1.0");
  app.footer(
      "Environment: SIGWIND_SCALAR=float|rational selects the arithmetic,\n"
      "SIGWIND_MAX_COEFFS caps dense signature storage (default 67108864).\n"
      "Exit codes: 0 certified, 2 uncertified, 1 input error, 3 certificate failure.");

  cli::SignatureArgs sig;
  std::size_t sig_level = 0;
  std::string sig_words;
  auto* sig_cmd = app.add_subcommand("signature", "signature coordinates as a JSON map from word to value");
  sig_cmd->add_option("input", sig.input, "polyline file (CSV or JSON)")->required();
  auto* sig_level_opt = sig_cmd->add_option("--level", sig_level, "every word up to this length");
  auto* sig_words_opt = sig_cmd->add_option("--words", sig_words, "words such as \"1,2;2,1\"");
  sig_level_opt->excludes(sig_words_opt);

  cli::MomentArgs mom;
  auto* mom_cmd = app.add_subcommand("moment", "int x^alpha d(x^beta) along the path");
  mom_cmd->add_option("input", mom.input, "polyline file (CSV or JSON)")->required();
  mom_cmd->add_option("--alpha", mom.alpha, "exponents, e.g. 1,0")->required();
  mom_cmd->add_option("--beta", mom.beta, "exponents, e.g. 0,1")->required();

  cli::WindingArgs win;
  std::size_t win_n = 0;
  double win_r = 0;
  auto* win_cmd = app.add_subcommand("winding", "winding number about {x1 = xi1, x2 = xi2}");
  win_cmd->add_option("input", win.input, "closed polyline file (CSV or JSON)")->required();
  win_cmd->add_option("--x1", win.x1, "first functional, comma separated (default e1)");
  win_cmd->add_option("--x2", win.x2, "second functional, comma separated (default e2)");
  win_cmd->add_option("--xi1", win.xi1, "offset for x1")->capture_default_str();
  win_cmd->add_option("--xi2", win.xi2, "offset for x2")->capture_default_str();
  auto* win_n_opt = win_cmd->add_option("--n", win_n, "number of outer terms N");
  auto* win_auto = win_cmd->add_flag("--auto-n", "choose N from the truncation bound (default)");
  win_n_opt->excludes(win_auto);
  auto* win_r_opt = win_cmd->add_option("--r", win_r, "contour radius, rho < r < log 2");
  win_cmd->add_flag("--force", win.force, "report even without a valid annulus certificate");

  cli::InterpolateArgs itp;
  std::size_t itp_terms = 0;
  double itp_r = 0;
  auto* itp_cmd = app.add_subcommand("interpolate", "int f^s g dh by binomial interpolation of F(k) = int f^k g dh");
  itp_cmd->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  itp_cmd->add_option("input", itp.input, "polyline file (CSV or JSON)")->required();
  itp_cmd->add_option("--f", itp.f, "polynomial f, e.g. \"x1^2 + x2^2\"")->capture_default_str();
  itp_cmd->add_option("--g", itp.g, "polynomial g")->required();
  itp_cmd->add_option("--h", itp.h, "polynomial h")->required();
  itp_cmd->add_flag("--antisymmetric", itp.antisymmetric, "integrate f^s (g dh - h dg)");
  itp_cmd->add_option("--s", itp.s, "exponent, e.g. -1, 0.5 or -0.5+0.3i")->capture_default_str();
  auto* itp_terms_opt = itp_cmd->add_option("--terms", itp_terms, "number of outer terms N");
  auto* itp_auto = itp_cmd->add_flag("--auto", "choose N so that the tail bound is below --tol (default)");
  itp_terms_opt->excludes(itp_auto);
  itp_cmd->add_option("--tol", itp.tol, "absolute tolerance for --auto")->capture_default_str();
  itp_cmd->add_option("--max-terms", itp.max_terms, "largest N tried by --auto")->capture_default_str();
  auto* itp_r_opt = itp_cmd->add_option("--r", itp_r, "contour radius, rho < r < log 2");
  itp_cmd->add_flag("--force", itp.force, "with --terms, report even if f is not certified in (1/2, 2)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kInputError;
  }

  cli::Config config;
  try {
    config = cli::config_from_env();
  } catch (const cli::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return cli::kInputError;
  }

  cli::CommandResult res;
  if (*sig_cmd) {
    std::optional<std::size_t> level;
    std::optional<std::string> words;
    copy_if_set(sig_level_opt, sig_level, level);
    copy_if_set(sig_words_opt, sig_words, words);
    sig.level = level;
    sig.words = words;
    res = cli::run_signature(sig, config);
  } else if (*mom_cmd) {
    res = cli::run_moment(mom, config);
  } else if (*win_cmd) {
    copy_if_set(win_n_opt, win_n, win.n);
    copy_if_set(win_r_opt, win_r, win.r);
    res = cli::run_winding(win, config);
  } else if (*itp_cmd) {
    copy_if_set(itp_terms_opt, itp_terms, itp.terms);
    copy_if_set(itp_r_opt, itp_r, itp.r);
    res = cli::run_interpolate(itp, config);
  }
  if (!res.json.empty()) std::cout << res.json << "\n";
  if (!res.error.empty()) std::cerr << res.error << "\n";
  return res.exit_code;
}
