#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "rll/dimension.hpp"
#include "rll/markov.hpp"
#include "rll/measure.hpp"
#include "rll/parallel.hpp"
#include "rll/rational.hpp"
#include "rll/univoque.hpp"
#include "rll/verify.hpp"
#include "rll/words.hpp"

namespace rll::cli {

namespace {

using nlohmann::json;

std::string format_or(const RunConfig& c, const char* fallback) {
  return c.format.empty() ? fallback : c.format;
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed) {
    if (format == f) return;
  }
  throw UsageError("unsupported --format '" + format + "'");
}

unsigned worker_count(const RunConfig& c) {
  return c.threads != 0 ? c.threads : default_worker_count();
}

// Probability plus the arithmetic mode it selects.
struct Probability {
  ProbabilityInput value;
  Mode mode = Mode::exact;
};

Probability resolve_probability(const RunConfig& c, std::ostream& err, Mode preferred) {
  Probability prob;
  try {
    prob.value = parse_probability(c.p);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (!(prob.value.exact > 0 && prob.value.exact < 1)) throw UsageError("--p must lie in (0,1)");
  prob.mode = preferred;
  if (c.mode == "float") prob.mode = Mode::real;
  if (c.mode == "exact") prob.mode = Mode::exact;
  if (!c.mode.empty() && c.mode != "float" && c.mode != "exact") {
    throw UsageError("--mode must be 'exact' or 'float'");
  }
  if (prob.mode == Mode::exact && !prob.value.is_exact) {
    err << "warning: decimal p '" << c.p << "' is not exact; using float mode (pass num/den for exact)\n";
    prob.mode = Mode::real;
  }
  return prob;
}

std::string require_word(const RunConfig& c) {
  if (!is_binary(c.word)) throw UsageError("--w must consist of '0' and '1'");
  return c.word;
}

template <class Scalar>
json scalar_json(const Scalar& value) {
  if constexpr (is_exact_v<Scalar>) {
    return format_rational(value);
  } else {
    return value;
  }
}

std::string csv_number(double value) { return format_double(value); }

class OutputSink {
 public:
  OutputSink(const RunConfig& c, std::ostream& fallback) {
    if (!c.out.empty()) {
      file_.open(c.out, std::ios::binary);
      if (!file_) throw UsageError("cannot open output file '" + c.out + "'");
      stream_ = &file_;
    } else {
      stream_ = &fallback;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

json occurrence_json(const Word& w) {
  const OccurrenceReport r = occurrence_report(w);
  return json{{"w", w.symbols()}, {"set0", r.set0}, {"set1", r.set1}, {"n0", r.n0}, {"n1", r.n1}};
}

template <class Scalar>
void measure_records(const RunConfig& c, const Scalar& p, std::ostream& out) {
  const BernoulliTypeMeasure<Scalar> measure(c.m, p);
  const std::string format = format_or(c, c.series ? "csv" : "json");
  if (c.series) {
    require_format(format, {"csv"});
    const std::size_t kmax = c.kmax != 0 ? c.kmax : 20;
    const auto s = pullback_series(measure, kmax);
    out << "k,a,b,c,d,cesaro_a\n";
    for (std::size_t k = 0; k <= kmax; ++k) {
      auto cell = [](const Scalar& v) {
        if constexpr (is_exact_v<Scalar>) {
          return format_rational(v);
        } else {
          return csv_number(v);
        }
      };
      out << k << ',' << cell(s.a[k]) << ',' << cell(s.b[k]) << ',' << cell(s.c[k]) << ','
          << cell(s.d[k]) << ',' << cell(s.cesaro_a[k]) << '\n';
    }
    return;
  }
  require_format(format, {"json"});
  const std::string w = require_word(c);
  json record{{"schema", kSchemaVersion},
              {"m", c.m},
              {"p", scalar_json(p)},
              {"w", w},
              {"mu", scalar_json(measure.mu_recursive(w))},
              {"mode", std::string(to_string(measure.mode()))}};
  if (is_admissible(w, c.m)) {
    record["mu_closed"] = scalar_json(measure.mu_closed(w));
    record["admissible"] = true;
  } else {
    record["mu_closed"] = nullptr;
    record["admissible"] = false;
  }
  if (c.k != 0) {
    record["k"] = c.k;
    record["pullback"] = scalar_json(measure.pullback_cylinder(w, c.k));
  }
  out << record.dump() << '\n';
}

// "a", "a:b" (step 1) or "a,b,c".
std::vector<int> parse_int_list(const std::string& spec) {
  std::vector<int> values;
  auto to_int = [&](std::string_view text) {
    int v = 0;
    const auto r = std::from_chars(text.data(), text.data() + text.size(), v);
    if (r.ec != std::errc{} || r.ptr != text.data() + text.size()) {
      throw UsageError("malformed integer list '" + spec + "'");
    }
    return v;
  };
  if (const auto colon = spec.find(':'); colon != std::string::npos) {
    const int lo = to_int(std::string_view(spec).substr(0, colon));
    const int hi = to_int(std::string_view(spec).substr(colon + 1));
    if (hi < lo) throw UsageError("empty range '" + spec + "'");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
  }
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, ',');) values.push_back(to_int(item));
  return values;
}

// "x", "x,y" or "lo:hi:step".
std::vector<double> parse_real_list(const std::string& spec) {
  auto to_real = [&](const std::string& text) {
    try {
      const ProbabilityInput v = parse_probability(text);
      return v.approx;
    } catch (const std::invalid_argument&) {
      throw UsageError("malformed number list '" + spec + "'");
    }
  };
  std::vector<std::string> parts;
  char sep = spec.find(':') != std::string::npos ? ':' : ',';
  std::stringstream in(spec);
  for (std::string item; std::getline(in, item, sep);) parts.push_back(item);
  std::vector<double> values;
  if (sep == ':') {
    if (parts.size() != 3) throw UsageError("range must be lo:hi:step, got '" + spec + "'");
    const double lo = to_real(parts[0]);
    const double hi = to_real(parts[1]);
    const double step = to_real(parts[2]);
    if (!(step > 0.0) || hi < lo) throw UsageError("invalid range '" + spec + "'");
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    for (long i = 0; i <= count; ++i) values.push_back(lo + static_cast<double>(i) * step);
    return values;
  }
  for (const auto& part : parts) values.push_back(to_real(part));
  return values;
}

}  // namespace

int cmd_enumerate(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.n == 0) throw UsageError("enumerate requires --n >= 1");
  const int n = static_cast<int>(c.n);
  checked_order(c.m);
  OutputSink sink(c, out);
  std::ostream& os = sink.stream();
  if (c.count_only) {
    const std::string format = format_or(c, "json");
    require_format(format, {"json", "text"});
    const mpz_class count = count_words(c.m, n);
    if (format == "text") {
      os << count.get_str() << '\n';
    } else {
      // Counts beyond 64 bits are emitted as decimal strings.
      json record{{"schema", kSchemaVersion}, {"m", c.m}, {"n", n}};
      if (count.fits_ulong_p()) {
        record["count"] = count.get_ui();
      } else {
        record["count"] = count.get_str();
      }
      os << record.dump() << '\n';
    }
    return kExitOk;
  }
  const std::string format = format_or(c, c.occurrences ? "json" : "text");
  require_format(format, {"json", "text"});
  std::vector<Word> words;
  try {
    words = enumerate_words(c.m, n);
  } catch (const CapacityError& e) {
    throw UsageError(std::string(e.what()) + " (pass --count)");
  }
  if (format == "text" && !c.occurrences) {
    for (const Word& w : words) os << w.symbols() << '\n';
  } else {
    for (const Word& w : words) {
      os << (c.occurrences ? occurrence_json(w) : json{{"w", w.symbols()}}).dump() << '\n';
    }
  }
  return kExitOk;
}

int cmd_measure(const RunConfig& c, std::ostream& out, std::ostream& err) {
  checked_order(c.m);
  const Probability prob = resolve_probability(c, err, Mode::exact);
  OutputSink sink(c, out);
  if (prob.mode == Mode::exact) {
    measure_records<Rational>(c, prob.value.exact, sink.stream());
  } else {
    measure_records<double>(c, prob.value.approx, sink.stream());
  }
  return kExitOk;
}

int cmd_lambda(const RunConfig& c, std::ostream& out, std::ostream& err) {
  checked_order(c.m);
  const Probability prob = resolve_probability(c, err, Mode::exact);
  const std::size_t n = c.n != 0 ? c.n : 10000;
  const std::string format = format_or(c, "json");
  require_format(format, {"json", "text"});

  json closed;
  json oracle;
  double closed_d = 0.0;
  double oracle_d = 0.0;
  if (prob.mode == Mode::exact) {
    const Rational value = lambda0_closed(c.m, prob.value.exact);
    const Rational stat = digit_mass(stationary(build_chain(c.m, prob.value.exact)), c.m, 0);
    closed = format_rational(value);
    oracle = format_rational(stat);
    closed_d = value.get_d();
    oracle_d = stat.get_d();
  } else {
    closed_d = lambda0_closed(c.m, prob.value.approx);
    oracle_d = digit_mass(stationary(build_chain(c.m, prob.value.approx)), c.m, 0);
    closed = closed_d;
    oracle = oracle_d;
  }
  // The Cesaro average always runs in binary64: exact horizons of 10^4 are impractical.
  const double cesaro = BernoulliTypeMeasure<double>(c.m, prob.value.approx).cesaro_lambda("0", n);

  OutputSink sink(c, out);
  std::ostream& os = sink.stream();
  if (format == "text") {
    os << "closed_form  " << closed.dump() << "  (" << format_double(closed_d) << ")\n"
       << "stationary   " << oracle.dump() << "  (" << format_double(oracle_d) << ")\n"
       << "cesaro       " << format_double(cesaro) << "  (n = " << n << ")\n";
  } else {
    json record{{"schema", kSchemaVersion},
                {"m", c.m},
                {"p", c.p},
                {"mode", std::string(to_string(prob.mode))},
                {"closed_form", closed},
                {"stationary", oracle},
                {"cesaro", cesaro},
                {"cesaro_n", n},
                {"closed_form_float", closed_d},
                {"stationary_float", oracle_d}};
    os << record.dump() << '\n';
  }
  return kExitOk;
}

int cmd_sample(const RunConfig& c, std::ostream& out, std::ostream& err) {
  checked_order(c.m);
  if (!c.seed) throw UsageError("sample requires --seed");
  if (c.n == 0) throw UsageError("sample requires --n >= 1");
  if (c.stride == 0) throw UsageError("--stride must be >= 1");
  const Probability prob = resolve_probability(c, err, Mode::real);
  const double p = prob.value.approx;
  const SampleRun run = sample(build_chain(c.m, p), c.n, *c.seed, c.stream);
  const std::vector<double> local = empirical_local_dimension(run, p);
  const std::string format = format_or(c, "csv");
  require_format(format, {"csv", "json"});
  OutputSink sink(c, out);
  std::ostream& os = sink.stream();
  if (format == "csv") {
    os << "n,freq0,local_dim\n";
    for (std::size_t i = c.stride; i <= run.size(); i += c.stride) {
      os << i << ',' << csv_number(run.frequency0(i)) << ',' << csv_number(local[i - 1]) << '\n';
    }
  } else {
    json record{{"schema", kSchemaVersion},
                {"m", c.m},
                {"p", c.p},
                {"seed", *c.seed},
                {"stream", c.stream},
                {"n", run.size()},
                {"freq0_final", run.frequency0(run.size())},
                {"local_dim_final", local.back()}};
    if (run.size() >= 200) {
      record["freq0_sigma_batch_means"] = batch_means_sigma(run);
    }
    os << record.dump() << '\n';
  }
  return kExitOk;
}

int cmd_dims(const RunConfig& c, std::ostream& out, std::ostream&) {
  const std::vector<int> ms = parse_int_list(c.m_spec.empty() ? std::to_string(c.m) : c.m_spec);
  const std::vector<double> ps = parse_real_list(c.p_spec.empty() ? c.p : c.p_spec);
  const std::string format = format_or(c, "csv");
  require_format(format, {"csv", "json"});
  for (int m : ms) checked_order(m);
  for (double p : ps) {
    if (!(p >= 0.0 && p <= 1.0)) throw UsageError("--p values must lie in [0,1]");
  }
  OutputSink sink(c, out);
  std::ostream& os = sink.stream();
  if (format == "csv") os << "m,p,q,bound,entropy,topo_dim\n";
  for (int m : ms) {
    for (double p : ps) {
      const DimensionProfile prof = profile(m, p, c.tol);
      if (format == "csv") {
        os << m << ',' << csv_number(p) << ',' << (prof.q ? csv_number(*prof.q) : "") << ','
           << (prof.lower_bound ? csv_number(*prof.lower_bound) : "") << ','
           << csv_number(prof.entropy) << ',' << csv_number(prof.topo_dim) << '\n';
      } else {
        json record{{"schema", kSchemaVersion}, {"m", m}, {"p", p},
                    {"entropy", prof.entropy}, {"topo_dim", prof.topo_dim}};
        record["q"] = prof.q ? json(*prof.q) : json(nullptr);
        record["bound"] = prof.lower_bound ? json(*prof.lower_bound) : json(nullptr);
        os << record.dump() << '\n';
      }
    }
  }
  return kExitOk;
}

int cmd_gamma(const RunConfig& c, std::ostream& out, std::ostream&) {
  if (c.word.empty() == c.periodic.empty()) {
    throw UsageError("gamma-check needs exactly one of --w or --periodic");
  }
  GammaVerdict verdict;
  if (!c.periodic.empty()) {
    if (c.variant != "strict" && c.variant != "weak") throw UsageError("--variant must be strict or weak");
    verdict = gamma_check_periodic(parse_periodic(c.periodic),
                                   c.variant == "strict" ? GammaVariant::strict : GammaVariant::weak);
  } else {
    const std::string w = require_word(c);
    if (w.size() < 2) throw UsageError("--w must have at least 2 symbols");
    const std::size_t depth = c.depth != 0 ? c.depth : w.size() - 1;
    if (depth > w.size() - 1) throw UsageError("--depth must be <= |w| - 1");
    verdict = gamma_check_prefix(SequenceWindow{w, true}, depth);
  }
  json record{{"schema", kSchemaVersion},
              {"status", std::string(to_string(verdict.status))},
              {"equality_flags", verdict.equality_flags}};
  if (verdict.witness) {
    record["k"] = verdict.witness->k;
    record["position"] = verdict.witness->position;
    record["bound"] = verdict.witness->bound == GammaBound::upper ? "upper" : "lower";
  } else {
    record["k"] = nullptr;
    record["position"] = nullptr;
  }
  OutputSink sink(c, out);
  sink.stream() << record.dump() << '\n';
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const std::string format = format_or(c, "text");
  require_format(format, {"text", "json"});
  VerifyOptions options;
  options.quick = c.quick;
  options.workers = worker_count(c);
  if (c.seed) options.seed = *c.seed;
  const VerifyReport report = run_verification(options);
  for (const auto& criterion : report.criteria) {
    err << "C" << criterion.id << " " << criterion.name << ": " << criterion.seconds << " s\n";
  }
  OutputSink sink(c, out);
  std::ostream& os = sink.stream();
  if (format == "text") {
    os << report.text(options.quick);
  } else {
    json criteria = json::array();
    for (const auto& criterion : report.criteria) {
      criteria.push_back({{"id", criterion.id},
                          {"name", criterion.name},
                          {"passed", criterion.passed},
                          {"detail", criterion.detail}});
    }
    os << json{{"schema", kSchemaVersion},
               {"quick", options.quick},
               {"all_passed", report.all_passed()},
               {"criteria", criteria}}
              .dump(2)
       << '\n';
  }
  return report.all_passed() ? kExitOk : kExitFailure;
}

int run_command(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const std::string& sub = config.subcommand;
    if (sub == "enumerate") return cmd_enumerate(config, out, err);
    if (sub == "measure") return cmd_measure(config, out, err);
    if (sub == "lambda") return cmd_lambda(config, out, err);
    if (sub == "sample") return cmd_sample(config, out, err);
    if (sub == "dims") return cmd_dims(config, out, err);
    if (sub == "gamma-check") return cmd_gamma(config, out, err);
    if (sub == "verify") return cmd_verify(config, out, err);
    throw UsageError("unknown subcommand '" + sub + "'");
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace rll::cli
