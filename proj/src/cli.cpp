#include "lerch/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "lerch/series_representations.hpp"
#include "lerch/special_functions.hpp"
#include "lerch/suite.hpp"

namespace lerch {

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Complex parse() {
    const Complex v = sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(text_.substr(pos_)) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("malformed value '" + std::string(text_) + "': " + what);
  }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool accept_word(std::string_view w) {
    skip_space();
    if (text_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < text_.size() && std::isalpha(static_cast<unsigned char>(text_[end]))) return false;
    pos_ = end;
    return true;
  }

  Complex sum() {
    Complex v = product();
    for (;;) {
      if (accept('+')) v += product();
      else if (accept('-')) v -= product();
      else return v;
    }
  }
  Complex product() {
    Complex v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        const Complex d = unary();
        if (d == 0.0) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= power();  // implicit product: "2pi", "0.5i"
      } else {
        return v;
      }
    }
  }
  Complex unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }
  Complex power() {
    const Complex base = atom();
    if (!accept('^')) return base;
    const Complex e = unary();
    if (e.imag() == 0.0 && e.real() == std::round(e.real()) && std::abs(e.real()) <= 64) {
      Complex r = 1.0;
      for (int k = 0; k < std::abs(static_cast<int>(e.real())); ++k) r *= base;
      return e.real() < 0 ? 1.0 / r : r;
    }
    return std::pow(base, e);
  }
  bool starts_atom() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalpha(static_cast<unsigned char>(c));
  }
  Complex atom() {
    skip_space();
    if (accept('(')) {
      const Complex v = sum();
      if (!accept(')')) fail("missing ')'");
      return v;
    }
    if (accept_word("pi")) return kPi;
    if (accept_word("i")) return kI;
    for (auto [name, fn] : std::initializer_list<std::pair<std::string_view, Complex (*)(const Complex&)>>{
             {"sqrt", [](const Complex& z) { return std::sqrt(z); }},
             {"exp", [](const Complex& z) { return std::exp(z); }},
             {"log", [](const Complex& z) { return std::log(z); }}}) {
      if (accept_word(name)) {
        if (!accept('(')) fail("expected '(' after " + std::string(name));
        const Complex v = sum();
        if (!accept(')')) fail("missing ')'");
        return fn(v);
      }
    }
    if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      const std::string rest(text_.substr(pos_));
      char* end = nullptr;
      const double v = std::strtod(rest.c_str(), &end);
      if (end == rest.c_str()) fail("bad number");
      pos_ += static_cast<std::size_t>(end - rest.c_str());
      return v;
    }
    fail(pos_ < text_.size() ? "unexpected '" + std::string(1, text_[pos_]) + "'" : "unexpected end");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt(z.real());
  const std::string im = fmt(z.imag());
  return fmt(z.real()) + (im.front() == '-' ? "" : "+") + im + "i";
}

using ArgMap = std::map<std::string, std::string>;

ArgMap parse_args(const std::vector<std::string>& items) {
  ArgMap args;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size())
      throw std::invalid_argument("argument '" + item + "' is not of the form key=value");
    if (!args.emplace(item.substr(0, eq), item.substr(eq + 1)).second)
      throw std::invalid_argument("argument '" + item.substr(0, eq) + "' given twice");
  }
  return args;
}

class EvalArgs {
 public:
  explicit EvalArgs(ArgMap args) : args_(std::move(args)) {}

  const std::string& raw(const std::string& key) {
    const auto it = args_.find(key);
    if (it == args_.end()) throw std::invalid_argument("missing argument '" + key + "'");
    used_.push_back(key);
    return it->second;
  }
  Complex complex(const std::string& key) { return parse_literal(raw(key)); }
  double real(const std::string& key) {
    const Complex z = complex(key);
    if (z.imag() != 0.0) throw std::invalid_argument("argument '" + key + "' must be real");
    return z.real();
  }
  int integer(const std::string& key) {
    const double x = real(key);
    if (x != std::round(x) || std::abs(x) > 1e6) throw std::invalid_argument("argument '" + key + "' must be an integer");
    return static_cast<int>(x);
  }
  void finish(const std::string& function) const {
    for (const auto& [k, v] : args_)
      if (std::find(used_.begin(), used_.end(), k) == used_.end())
        throw std::invalid_argument("unexpected argument '" + k + "' for " + function);
  }

 private:
  ArgMap args_;
  std::vector<std::string> used_;
};

EvalResult evaluate(const std::string& function, EvalArgs& a, const SeriesParams& params) {
  EvalResult r;
  if (function == "zeta") {
    r = hurwitz_zeta(a.integer("s"), 1.0, params);
  } else if (function == "hurwitz_zeta") {
    const int s = a.integer("s");
    r = hurwitz_zeta(s, a.complex("b"), params);
  } else if (function == "beta") {
    r = dirichlet_beta(a.integer("s"), params);
  } else if (function == "polylog") {
    const int s = a.integer("s");
    r = polylog_unit(s, a.real("phi"), params);
  } else if (function == "lerch_phi") {
    const Complex z = a.complex("a");
    const int s = a.integer("s");
    r = lerch_phi(z, s, a.complex("b"), params);
  } else if (function == "l_series") {
    const Character chi = parse_character(a.raw("chi"));
    r = l_series(chi, a.integer("s"), params);
  } else {
    throw std::invalid_argument("unknown function '" + function +
                                "'; expected zeta, hurwitz_zeta, beta, polylog, lerch_phi or l_series");
  }
  a.finish(function);
  return r;
}

std::vector<std::size_t> parse_checkpoints(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || v <= 0)
      throw std::invalid_argument("checkpoint '" + item + "' is not a positive integer");
    out.push_back(static_cast<std::size_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("no checkpoints given");
  return out;
}

void print_catalog(std::ostream& out) {
  for (const auto& s : catalog()) {
    out << s.name << "  target=" << s.target << "  ratio=" << fmt(s.ratio()) << '\n';
    out << "    " << s.formula() << '\n';
    out << "    " << s.anchor << '\n';
  }
}

int cmd_verify(const SuiteConfig& config, const std::string& format, bool list, std::ostream& out) {
  if (list) {
    out << "checks:\n";
    for (const auto& name : suite_check_names()) out << "  " << name << '\n';
    out << "series:\n";
    for (const auto& s : catalog()) out << "  " << s.name << '\n';
    return kExitPass;
  }
  const SuiteReport report = run_suite(config);
  if (report.checks.empty()) throw std::invalid_argument("filter '" + config.filter + "' matches no checks");
  out << (format == "json" ? report_json(report) : report_text(report));
  return report.fail_count == 0 ? kExitPass : kExitFail;
}

int cmd_eval(const std::string& function, const std::vector<std::string>& items, const SeriesParams& params,
             const std::string& format, std::ostream& out) {
  EvalArgs args(parse_args(items));
  const EvalResult r = evaluate(function, args, params);
  if (format == "json") {
    out << "{\"function\": \"" << function << "\", \"value\": [" << fmt(r.value.real()) << ", "
        << fmt(r.value.imag()) << "], \"terms_used\": " << r.terms_used
        << ", \"error_estimate\": " << fmt(r.error_estimate) << "}\n";
  } else {
    out << "value          " << fmt_complex(r.value) << '\n';
    out << "terms_used     " << r.terms_used << '\n';
    out << "error_estimate " << fmt(r.error_estimate) << '\n';
  }
  return kExitPass;
}

int cmd_series(const std::string& name, const std::string& checkpoints, const std::string& format, std::ostream& out) {
  const ConvergenceProfile profile = convergence_profile(name, parse_checkpoints(checkpoints));
  const SeriesSpec& spec = find_series(name);
  if (format == "json") {
    out << "{\"name\": \"" << profile.name << "\", \"target\": \"" << spec.target << "\", \"rows\": [";
    for (std::size_t i = 0; i < profile.rows.size(); ++i) {
      const auto& r = profile.rows[i];
      out << (i ? ", " : "") << "{\"terms\": " << r.terms_used << ", \"abs_error\": " << fmt(r.abs_error)
          << ", \"truncation_error\": " << fmt(r.truncation_error) << ", \"digits\": " << fmt(r.correct_digits)
          << "}";
    }
    out << "]}\n";
    return kExitPass;
  }
  out << profile.name << "  target=" << spec.target << "  ratio=" << fmt(spec.ratio()) << '\n';
  char line[128];
  std::snprintf(line, sizeof line, "%8s  %12s  %16s  %7s\n", "terms", "abs_error", "truncation_error", "digits");
  out << line;
  for (const auto& r : profile.rows) {
    std::snprintf(line, sizeof line, "%8zu  %12.3e  %16.3e  %7.2f\n", r.terms_used, r.abs_error, r.truncation_error,
                  r.correct_digits);
    out << line;
  }
  return kExitPass;
}

}  // namespace

Complex parse_literal(std::string_view text) {
  const Complex z = LiteralParser(text).parse();
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("value '" + std::string(text) + "' is not finite");
  return z;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lerch transcendent numerics and identity verification"};
  app.name("lerch");
  app.require_subcommand(1);

  std::string format = "text";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };

  auto* verify = app.add_subcommand("verify", "Run the identity verification suite");
  std::string filter = "*";
  double tolerance = 0.0;
  std::size_t max_terms = SeriesParams{}.max_terms;
  bool list = false;
  verify->add_option("--filter", filter, "Glob over check names");
  auto* tol_opt = verify->add_option("--tolerance", tolerance, "Override the rel/abs thresholds of passing checks");
  verify->add_option("--max-terms", max_terms, "Series term limit");
  verify->add_flag("--list", list, "Print check names and catalog entries");
  add_format(verify);

  auto* eval = app.add_subcommand("eval", "Evaluate one function");
  std::string function;
  std::vector<std::string> eval_args;
  eval->add_option("function", function, "zeta, hurwitz_zeta, beta, polylog, lerch_phi or l_series")->required();
  eval->add_option("args", eval_args, "key=value arguments");
  eval->add_option("--max-terms", max_terms, "Series term limit");
  add_format(eval);

  auto* series = app.add_subcommand("series", "Convergence profile of a catalog series");
  std::string series_name;
  std::string checkpoints = "5,10,20,40";
  series->add_option("name", series_name, "Catalog entry")->required();
  series->add_option("--checkpoints", checkpoints, "Comma-separated term counts");
  add_format(series);

  app.add_subcommand("catalog", "List the series catalog");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    SeriesParams params;
    params.max_terms = max_terms;
    params.validate();
    if (*verify) {
      SuiteConfig config;
      config.filter = filter;
      if (*tol_opt) config.tolerance = tolerance;
      config.params = params;
      return cmd_verify(config, format, list, out);
    }
    if (*eval) return cmd_eval(function, eval_args, params, format, out);
    if (*series) return cmd_series(series_name, checkpoints, format, out);
    print_catalog(out);
    return kExitPass;
  } catch (const UnknownSeries& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFail;
  }
}

}  // namespace lerch
