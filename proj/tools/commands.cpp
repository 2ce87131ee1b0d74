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
#include "commands.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <vector>

#include "io.hpp"
#include "json_writer.hpp"
#include "sigwind/sigwind.hpp"

namespace sigwind::cli {

Config config_from_env() {
  Config c;
  if (const char* mode = std::getenv("SIGWIND_SCALAR")) {
    const std::string m = trim(mode);
    if (m == "rational" || m == "exact")
      c.scalar = ScalarMode::rational;
    else if (m == "float" || m == "double" || m.empty())
      c.scalar = ScalarMode::float_mode;
    else
      throw InputError("SIGWIND_SCALAR must be 'float' or 'rational', got '" + m + "'");
  }
  if (const char* cap = std::getenv("SIGWIND_MAX_COEFFS")) {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(cap, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || cap[used] != '\0' || v == 0)
      throw InputError(std::string("SIGWIND_MAX_COEFFS must be a positive integer, got '") + cap + "'");
    c.budget.max_coefficients = static_cast<std::size_t>(v);
  }
  return c;
}

namespace {

void emit(JsonWriter& w, double x) { w.value(x); }
void emit(JsonWriter& w, const Rational& x) { w.value(x.get_str()); }

template <Scalar S>
Polynomial<double> as_double(const Polynomial<S>& p) {
  std::vector<double> base;
  for (const S& b : p.basepoint()) base.push_back(to_double(b));
  Polynomial<double> out(p.dim(), base);
  for (const auto& [m, c] : p.terms()) out.add_term(m, to_double(c));
  return out;
}

template <Scalar S>
Polyline<double> as_double(const Polyline<S>& path) {
  std::vector<std::vector<double>> v;
  for (const auto& p : path.vertices()) {
    std::vector<double> q;
    for (const S& x : p) q.push_back(to_double(x));
    v.push_back(std::move(q));
  }
  return Polyline<double>(path.dimension(), std::move(v));
}

// Runs `body` and maps exceptions to exit codes.
template <class Body>
CommandResult guarded(Body&& body) {
  CommandResult res;
  try {
    body(res);
  } catch (const CertificateError& e) {
    res = {kCertificateFailure, "", std::string("certificate failure: ") + e.what()};
  } catch (const SizeError& e) {
    res = {kInputError, "", std::string("size error: ") + e.what()};
  } catch (const InputError& e) {
    res = {kInputError, "", std::string("input error: ") + e.what()};
  } catch (const std::invalid_argument& e) {
    res = {kInputError, "", std::string("input error: ") + e.what()};
  } catch (const std::out_of_range& e) {
    res = {kInputError, "", std::string("input error: ") + e.what()};
  } catch (const std::exception& e) {
    res = {kInputError, "", std::string("error: ") + e.what()};
  }
  return res;
}

template <Scalar S>
void signature_impl(const SignatureArgs& args, const Config& config, CommandResult& res) {
  if (args.level.has_value() == args.words.has_value()) throw InputError("give exactly one of --level or --words");
  const Polyline<S> path = read_polyline<S>(args.input);
  const std::size_t d = path.dimension();
  JsonWriter w;
  w.begin_object();
  if (args.words) {
    SignatureView<S> view(path);
    for (const auto& item : split(*args.words, ';')) {
      std::vector<Letter> letters;
      if (!item.empty())
        for (const auto& field : split(item, ',')) {
          const MultiIndex one = parse_multi_index(field, "letter");
          if (one[0] < 1 || one[0] > d)
            throw InputError("letter " + field + " outside path dimension " + std::to_string(d));
          letters.push_back(static_cast<Letter>(one[0]));
        }
      const Word word(d, std::move(letters));
      w.key(word.to_string());
      emit(w, view.coordinate(word));
    }
  } else {
    // every coefficient above degree 0 of a constant path vanishes
    const std::size_t level = path.increments().empty() ? 0 : *args.level;
    const DenseSignature<S> x = polyline_signature(path, level, config.budget);
    for (std::size_t k = 0; k <= level; ++k) {
      auto coeffs = x.level_coefficients(k);
      for (std::size_t idx = 0; idx < coeffs.size(); ++idx) {
        std::vector<Letter> letters(k);
        std::size_t r = idx;
        for (std::size_t j = k; j-- > 0;) {
          letters[j] = static_cast<Letter>(r % d + 1);
          r /= d;
        }
        w.key(Word(d, std::move(letters)).to_string());
        emit(w, coeffs[idx]);
      }
    }
  }
  w.end_object();
  res.json = w.str();
}

template <Scalar S>
void moment_impl(const MomentArgs& args, const Config& config, CommandResult& res) {
  const Polyline<S> path = read_polyline<S>(args.input);
  const MultiIndex alpha = parse_multi_index(args.alpha, "alpha");
  const MultiIndex beta = parse_multi_index(args.beta, "beta");
  const std::size_t d = path.dimension();
  if (alpha.dim() != d || beta.dim() != d)
    throw InputError("alpha and beta need " + std::to_string(d) + " entries to match the path dimension");
  SignatureView<S> view(path);
  MomentEvaluator<S> eval(view, MomentBackend::arrangements, config.budget);
  const S value = eval.integral(Polynomial<S>::monomial(alpha), Polynomial<S>::monomial(beta));
  JsonWriter w;
  w.begin_object().key("value");
  emit(w, value);
  w.key("alpha").begin_array();
  for (unsigned a : alpha.exponents()) w.value(a);
  w.end_array().key("beta").begin_array();
  for (unsigned b : beta.exponents()) w.value(b);
  w.end_array().end_object();
  res.json = w.str();
}

template <Scalar S>
std::vector<S> functional_or_axis(const std::string& text, std::size_t d, std::size_t axis, const char* name) {
  if (text.empty()) {
    if (axis >= d) throw InputError(std::string("--") + name + " is required for a path of dimension " + std::to_string(d));
    std::vector<S> e(d, S(0));
    e[axis] = S(1);
    return e;
  }
  std::vector<S> v = parse_vector<S>(text, name);
  if (v.size() != d)
    throw InputError(std::string("--") + name + " has " + std::to_string(v.size()) + " components, path dimension is " +
                     std::to_string(d));
  return v;
}

template <Scalar S>
void winding_impl(const WindingArgs& args, const Config& config, CommandResult& res) {
  const Polyline<S> path = read_polyline<S>(args.input);
  const std::size_t d = path.dimension();
  WindingProblem<S> problem{path, functional_or_axis<S>(args.x1, d, 0, "x1"), functional_or_axis<S>(args.x2, d, 1, "x2"),
                            parse_number<S>(args.xi1, "xi1"), parse_number<S>(args.xi2, "xi2")};
  WindingOptions opt;
  opt.n_terms = args.n;
  opt.r = args.r;
  opt.force = args.force;
  opt.budget = config.budget;
  const WindingResult r = winding_number(problem, opt);
  JsonWriter w;
  w.begin_object();
  w.key("winding").value(r.winding);
  w.key("partialSum").value(r.partialSum);
  w.key("N").value(r.N);
  w.key("tailBound").value(r.tailBound);
  w.key("certificate").begin_object();
  w.key("fMin").value(r.certificate.fMin);
  w.key("fMax").value(r.certificate.fMax);
  w.key("rho").value(r.certificate.rho);
  w.key("r").value(r.certificate.r);
  w.key("valid").value(r.certificate.valid);
  w.end_object();
  w.key("certified").value(r.certified);
  w.key("lengths").begin_array().value(r.length1).value(r.length2).end_array();
  w.key("F").begin_array();
  for (double x : r.F) w.value(x);
  w.end_array().key("runningSums").begin_array();
  for (double x : r.runningSums) w.value(x);
  w.end_array().key("tailBounds").begin_array();
  for (double x : r.tailBounds) w.value(x);
  w.end_array();
  w.end_object();
  res.json = w.str();
  res.exit_code = r.certified ? kCertified : kUncertified;
}

template <Scalar S>
void interpolate_impl(const InterpolateArgs& args, const Config& config, CommandResult& res) {
  if (args.g.empty() || args.h.empty()) throw InputError("--g and --h are required");
  const Polyline<S> path = read_polyline<S>(args.input);
  const std::size_t d = path.dimension();
  const Polynomial<S> f = parse_polynomial<S>(args.f, d);
  const Polynomial<S> g = parse_polynomial<S>(args.g, d);
  const Polynomial<S> h = parse_polynomial<S>(args.h, d);
  const Complex s = parse_complex(args.s);

  const Polyline<double> pd = as_double(path);
  double weight = weight_bound(as_double(g), as_double(h), pd);
  if (args.antisymmetric) weight += weight_bound(as_double(h), as_double(g), pd);
  std::optional<BoundInputs> bounds;
  Interval f_range;
  try {
    bounds = interpolation_bounds(as_double(f), weight, pd, args.r, &f_range);
  } catch (const CertificateError&) {
    if (!args.terms || !args.force) throw;
  } catch (const std::invalid_argument&) {
    if (!args.terms || !args.force) throw;
  }

  std::size_t n_terms = 0;
  if (args.terms) {
    n_terms = *args.terms;
  } else {
    auto n = terms_for_tolerance(s, *bounds, args.tol, args.max_terms);
    if (!n) throw CertificateError("no N <= " + std::to_string(args.max_terms) + " reaches tolerance " + std::to_string(args.tol));
    n_terms = *n;
  }

  // F(k) = int f^k g dh (minus int f^k h dg), largest k first so one table serves all
  SignatureView<S> view(path);
  MomentEvaluator<S> eval(view, MomentBackend::arrangements, config.budget);
  SampleSequence<S> samples{std::vector<S>(n_terms + 1), Provenance::signature_extracted};
  for (std::size_t k = n_terms + 1; k-- > 0;) {
    const Polynomial<S> fk = f.pow(static_cast<unsigned>(k));
    S v = eval.integral(fk * g, h);
    if (args.antisymmetric) v -= eval.integral(fk * h, g);
    samples.values[k] = v;
  }
  const std::vector<S> delta = leading_differences(samples, n_terms);
  std::vector<Complex> cdelta;
  for (const S& x : delta) cdelta.emplace_back(to_double(x), 0.0);
  const InterpolationResult<Complex> out = interpolate_differences(s, cdelta, bounds);

  JsonWriter w;
  w.begin_object();
  w.key("value").begin_object().key("re").value(out.value.real()).key("im").value(out.value.imag()).end_object();
  w.key("N").value(n_terms);
  if (out.tailBound)
    w.key("tailBound").value(*out.tailBound);
  else
    w.key("tailBound").null();
  w.key("certified").value(out.tailBound.has_value());
  w.key("s").begin_object().key("re").value(s.real()).key("im").value(s.imag()).end_object();
  if (bounds) {
    w.key("fRange").begin_array().value(f_range.lo).value(f_range.hi).end_array();
    w.key("rho").value(bounds->rho);
    w.key("r").value(bounds->r);
    w.key("weight").value(bounds->weight);
  }
  w.key("F").begin_array();
  for (const S& x : samples.values) emit(w, x);
  w.end_array().key("termMagnitudes").begin_array();
  for (double m : out.perTermMagnitudes) w.value(m);
  w.end_array();
  w.end_object();
  res.json = w.str();
  res.exit_code = out.tailBound ? kCertified : kUncertified;
}

template <template <class> class Impl, class Args>
CommandResult dispatch(const Args& args, const Config& config) {
  return guarded([&](CommandResult& res) {
    if (config.scalar == ScalarMode::rational)
      Impl<Rational>::run(args, config, res);
    else
      Impl<double>::run(args, config, res);
  });
}

template <class S>
struct SignatureCmd {
  static void run(const SignatureArgs& a, const Config& c, CommandResult& r) { signature_impl<S>(a, c, r); }
};
template <class S>
struct MomentCmd {
  static void run(const MomentArgs& a, const Config& c, CommandResult& r) { moment_impl<S>(a, c, r); }
};
template <class S>
struct WindingCmd {
  static void run(const WindingArgs& a, const Config& c, CommandResult& r) { winding_impl<S>(a, c, r); }
};
template <class S>
struct InterpolateCmd {
  static void run(const InterpolateArgs& a, const Config& c, CommandResult& r) { interpolate_impl<S>(a, c, r); }
};

}  // namespace

CommandResult run_signature(const SignatureArgs& args, const Config& config) {
  return dispatch<SignatureCmd>(args, config);
}
CommandResult run_moment(const MomentArgs& args, const Config& config) { return dispatch<MomentCmd>(args, config); }
CommandResult run_winding(const WindingArgs& args, const Config& config) { return dispatch<WindingCmd>(args, config); }
CommandResult run_interpolate(const InterpolateArgs& args, const Config& config) {
  return dispatch<InterpolateCmd>(args, config);
}

}  // namespace sigwind::cli
