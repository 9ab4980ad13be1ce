#include "seaweed/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <memory>
#include <thread>
#include <unordered_set>

#include "seaweed/families.hpp"
#include "seaweed/meander.hpp"
#include "seaweed/spectrum.hpp"

namespace seaweed {

namespace {

constexpr std::array<std::pair<Conjecture, std::string_view>, 5> kConjectureNames{{
    {Conjecture::Unimodal_2_8, "unimodal_2_8"},
    {Conjecture::Stability_4_16, "stability_4_16"},
    {Conjecture::Stability_4_17, "stability_4_17"},
    {Conjecture::Stability_4_18, "stability_4_18"},
    {Conjecture::None, "none"},
}};

void append_note(std::string& note, const std::string& text) {
  if (!note.empty()) note += "; ";
  note += text;
}

std::string interval_text(int lo, int hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

bool is_interval(const IntegerMultiset& s, int lo, int hi) {
  return !s.empty() && s.min() == lo && s.max() == hi &&
         static_cast<int>(s.distinct()) == hi - lo + 1;
}

bool same_support(const IntegerMultiset& a, const IntegerMultiset& b) {
  return a.values() == b.values();
}

// Checks the proven claims on a computed spectrum: unbroken and centered.
void check_unbroken(SweepRecord& rec) {
  const auto& r = *rec.report;
  if (r.spectrum.empty()) return;
  if (!r.unbroken) {
    rec.proven_ok = false;
    append_note(rec.note, "spectrum is broken: " + r.spectrum.to_exponent_string());
  } else if (!r.centered_half) {
    rec.proven_ok = false;
    append_note(rec.note, "spectrum not centered at 1/2: " + r.spectrum.to_exponent_string());
  }
}

SweepRecord base_record(const SeaweedSpec& spec) {
  SweepRecord rec;
  rec.spec = spec.to_string();
  rec.key = rec.spec;
  rec.n = spec.n();
  rec.index = index_sl(spec);
  rec.frobenius = rec.index == 0;
  return rec;
}

struct Unit {
  std::string key;
  std::function<SweepRecord()> run;
};

SweepRecord timed(const Unit& unit) {
  const auto start = std::chrono::steady_clock::now();
  SweepRecord rec;
  try {
    rec = unit.run();
  } catch (const std::exception& e) {
    rec = SweepRecord{};
    rec.spec = unit.key;
    rec.proven_ok = false;
    rec.note = std::string("evaluation threw: ") + e.what();
  }
  rec.key = unit.key;
  const auto stop = std::chrono::steady_clock::now();
  rec.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(stop - start).count();
  return rec;
}

// Stateless parallel map over units with a single in-order writer.
class Runner {
 public:
  explicit Runner(const SweepJob& job) : job_(job) {
    job.validate();
    if (job.resume && !job.output_path.empty()) {
      records_ = load_records(job.output_path);
      for (const auto& r : records_) seen_.insert(r.key);
    }
    if (!job.output_path.empty()) {
      const auto mode = job.resume ? std::ios::app : std::ios::trunc;
      out_.open(job.output_path, std::ios::out | mode);
      if (!out_) throw SweepError("cannot write sweep output: " + job.output_path);
    }
  }

  void run(const std::vector<Unit>& units) {
    std::vector<const Unit*> todo;
    for (const auto& u : units) {
      if (!seen_.contains(u.key)) todo.push_back(&u);
    }
    constexpr std::size_t kBatch = 2048;
    for (std::size_t begin = 0; begin < todo.size(); begin += kBatch) {
      const std::size_t end = std::min(todo.size(), begin + kBatch);
      auto batch = map_batch(todo, begin, end);
      for (auto& rec : batch) {
        if (out_.is_open()) out_ << rec.to_json().dump() << '\n';
        seen_.insert(rec.key);
        records_.push_back(std::move(rec));
      }
      if (out_.is_open()) {
        out_.flush();
        if (!out_) throw SweepError("write failed: " + job_.output_path);
      }
    }
  }

  SweepResult finish() {
    SweepResult result;
    result.summary = summarize(job_.conjecture, records_);
    result.records = std::move(records_);
    return result;
  }

 private:
  std::vector<SweepRecord> map_batch(const std::vector<const Unit*>& todo, std::size_t begin,
                                     std::size_t end) {
    std::vector<SweepRecord> out(end - begin);
    const unsigned workers = std::max(1u, std::min<unsigned>(job_.workers, end - begin));
    if (workers == 1) {
      for (std::size_t i = begin; i < end; ++i) out[i - begin] = timed(*todo[i]);
      return out;
    }
    std::atomic<std::size_t> next{begin};
    auto worker = [&] {
      for (std::size_t i = next++; i < end; i = next++) out[i - begin] = timed(*todo[i]);
    };
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return out;
  }

  const SweepJob& job_;
  std::vector<SweepRecord> records_;
  std::unordered_set<std::string> seen_;
  std::ofstream out_;
};

std::vector<Unit> spec_units(int n, bool check_unimodal) {
  auto comps = std::make_shared<const std::vector<Composition>>(compositions_of(n));
  std::vector<Unit> units;
  units.reserve(comps->size() * comps->size());
  for (std::size_t t = 0; t < comps->size(); ++t) {
    for (std::size_t b = 0; b < comps->size(); ++b) {
      SeaweedSpec spec((*comps)[t], (*comps)[b]);
      units.push_back({spec.to_string(),
                       [spec, check_unimodal] { return evaluate_spec(spec, check_unimodal); }});
    }
  }
  return units;
}

SweepRecord evaluate_tail(const SeaweedSpec& base, int r, bool plus_k) {
  const int k = base.top().parts().back();
  const auto grown = append_doubled_tail(base, r, plus_k);
  SweepRecord rec = base_record(grown);
  const bool proven = k <= 2;
  if (!rec.frobenius) {
    (proven ? rec.proven_ok : rec.conjecture_ok) = false;
    append_note(rec.note, "not Frobenius (index " + std::to_string(rec.index) + ")");
    return rec;
  }
  const auto s = spectrum(base);
  rec.report = make_report(grown, spectrum(grown));
  check_unbroken(rec);
  const auto& s2 = rec.report->spectrum;
  if (k == 1) {
    const auto expected =
        extend_with_2s(s, r, plus_k ? TwosVariant::RTwosPlusOne : TwosVariant::RTwos);
    if (expected != s2) {
      rec.proven_ok = false;
      append_note(rec.note, "adding 2s: expected " + expected.to_exponent_string());
    }
  } else if (k == 2) {
    const auto expected =
        extend_with_4s(s, r, plus_k ? FoursVariant::RFoursPlusTwo : FoursVariant::RFours);
    if (expected != s2) {
      rec.proven_ok = false;
      append_note(rec.note, "adding 4s: expected " + expected.to_exponent_string());
    }
  }
  auto flag = [&](const std::string& what) {
    rec.conjecture_ok = false;
    append_note(rec.note, what);
  };
  if (!s.is_submultiset_of(s2)) flag("base spectrum " + s.to_exponent_string() + " not contained");
  if (!same_support(s, s2)) flag("distinct values changed from " + s.to_exponent_string());
  if (is_unimodal(s) && !rec.report->unimodal) flag("unimodality lost");
  if (r > 1) {
    const auto first = append_doubled_tail(base, 1, plus_k);
    if (is_frobenius(first) && !same_support(spectrum(first), s2)) {
      flag("distinct values differ from r=1");
    }
  }
  return rec;
}

SeaweedSpec stab2_spec(int k, int r) {
  std::vector<int> top(r, 2 * k);
  top.push_back(1);
  return SeaweedSpec(Composition(std::move(top)), Composition({2 * k * r + 1}));
}

SeaweedSpec stab3_spec(int k, int r) {
  std::vector<int> top(r, 2 * k);
  top.push_back(1);
  std::vector<int> bottom{1};
  bottom.insert(bottom.end(), r, 2 * k);
  return SeaweedSpec(Composition(std::move(top)), Composition(std::move(bottom)));
}

SweepRecord evaluate_stab2(int k, int r) {
  SweepRecord rec = base_record(stab2_spec(k, r));
  if (!rec.frobenius) {
    rec.conjecture_ok = false;
    append_note(rec.note, "not Frobenius (index " + std::to_string(rec.index) + ")");
    return rec;
  }
  rec.report = analyze(stab2_spec(k, r));
  check_unbroken(rec);
  const int lo = r % 2 == 1 ? -2 * k + 1 : -k;
  const int hi = r % 2 == 1 ? 2 * k : k + 1;
  if (!is_interval(rec.report->spectrum, lo, hi)) {
    rec.conjecture_ok = false;
    append_note(rec.note, "distinct values are not " + interval_text(lo, hi));
  }
  if (!rec.report->unimodal) {
    rec.conjecture_ok = false;
    append_note(rec.note, "not unimodal");
  }
  return rec;
}

SweepRecord evaluate_stab3(int k, int r) {
  SweepRecord rec = base_record(stab3_spec(k, r));
  if (!rec.frobenius) {
    rec.conjecture_ok = false;
    append_note(rec.note, "not Frobenius (index " + std::to_string(rec.index) + ")");
    return rec;
  }
  rec.report = analyze(stab3_spec(k, r));
  check_unbroken(rec);
  const auto& s = rec.report->spectrum;
  if (!is_interval(s, -k + 1, k)) {
    rec.conjecture_ok = false;
    append_note(rec.note, "distinct values are not " + interval_text(-k + 1, k));
  }
  if (!rec.report->log_concave) {
    rec.conjecture_ok = false;
    append_note(rec.note, "not log-concave");
  }
  const auto next_spec = stab3_spec(k + 1, r);
  if (!is_frobenius(next_spec)) {
    rec.conjecture_ok = false;
    append_note(rec.note, "k+1 member " + next_spec.to_string() + " is not Frobenius");
    return rec;
  }
  const auto next = spectrum(next_spec);
  for (int i = -k + 1; i <= k; ++i) {
    const int j = i <= 0 ? i - 1 : i + 1;
    if (s.count(i) != next.count(j)) {
      rec.conjecture_ok = false;
      append_note(rec.note, "multiplicity of " + std::to_string(i) + " is " +
                                std::to_string(s.count(i)) + " but k+1 has " +
                                std::to_string(next.count(j)) + " at " + std::to_string(j));
    }
  }
  return rec;
}

}  // namespace

std::string_view conjecture_name(Conjecture c) {
  for (const auto& [id, name] : kConjectureNames) {
    if (id == c) return name;
  }
  return "none";
}

std::optional<Conjecture> parse_conjecture(std::string_view name) {
  for (const auto& [id, text] : kConjectureNames) {
    if (text == name) return id;
  }
  return std::nullopt;
}

void SweepJob::validate() const {
  if (n_min < 1 || n_max < n_min) {
    throw DomainError("sweep needs 1 <= n_min <= n_max, got " + std::to_string(n_min) + ".." +
                      std::to_string(n_max));
  }
  if (n_max > 32) throw DomainError("sweep n_max is capped at 32");
  const bool stability = conjecture == Conjecture::Stability_4_16 ||
                         conjecture == Conjecture::Stability_4_17 ||
                         conjecture == Conjecture::Stability_4_18;
  if (stability && (k_max < 1 || r_max < 1)) {
    throw DomainError("stability sweeps need k_max >= 1 and r_max >= 1");
  }
  if (resume && output_path.empty()) throw DomainError("resume needs an output path");
}

nlohmann::ordered_json SweepRecord::to_json() const {
  nlohmann::ordered_json j;
  j["key"] = key;
  j["spec"] = spec;
  j["n"] = n;
  j["index"] = index;
  j["frobenius"] = frobenius;
  if (report) j["report"] = report->to_json();
  j["proven_ok"] = proven_ok;
  j["conjecture_ok"] = conjecture_ok;
  j["note"] = note;
  j["elapsed_us"] = elapsed_us;
  return j;
}

SweepRecord SweepRecord::from_json(const nlohmann::json& j) {
  SweepRecord r;
  r.key = j.at("key").get<std::string>();
  r.spec = j.at("spec").get<std::string>();
  r.n = j.at("n").get<int>();
  r.index = j.at("index").get<int>();
  r.frobenius = j.at("frobenius").get<bool>();
  if (j.contains("report")) r.report = SpectrumReport::from_json(j.at("report"));
  r.proven_ok = j.at("proven_ok").get<bool>();
  r.conjecture_ok = j.at("conjecture_ok").get<bool>();
  r.note = j.at("note").get<std::string>();
  r.elapsed_us = j.at("elapsed_us").get<std::int64_t>();
  return r;
}

bool SweepRecord::same_result(const SweepRecord& o) const {
  return key == o.key && spec == o.spec && n == o.n && index == o.index &&
         frobenius == o.frobenius && report == o.report && proven_ok == o.proven_ok &&
         conjecture_ok == o.conjecture_ok && note == o.note;
}

int SweepSummary::exit_code() const {
  if (!engine_bugs.empty()) return 1;
  if (!counterexamples.empty()) return 2;
  return 0;
}

nlohmann::ordered_json SweepSummary::to_json() const {
  nlohmann::ordered_json j;
  j["conjecture"] = std::string(conjecture_name(conjecture));
  j["records"] = records;
  j["frobenius"] = frobenius;
  j["not_unimodal"] = not_unimodal;
  j["not_log_concave"] = not_log_concave;
  j["not_symmetric_about_half"] = not_symmetric;
  j["engine_bugs"] = engine_bugs;
  j["counterexamples"] = counterexamples;
  j["exit_code"] = exit_code();
  return j;
}

SweepSummary summarize(Conjecture c, const std::vector<SweepRecord>& records) {
  SweepSummary s;
  s.conjecture = c;
  s.records = static_cast<std::int64_t>(records.size());
  for (const auto& r : records) {
    if (r.frobenius) ++s.frobenius;
    if (r.report) {
      if (!r.report->unimodal) ++s.not_unimodal;
      if (!r.report->log_concave) ++s.not_log_concave;
      if (!r.report->symmetric_about_half) ++s.not_symmetric;
    }
    if (!r.proven_ok) s.engine_bugs.push_back(r.key + ": " + r.note);
    if (!r.conjecture_ok) s.counterexamples.push_back(r.key + ": " + r.note);
  }
  std::sort(s.engine_bugs.begin(), s.engine_bugs.end());
  std::sort(s.counterexamples.begin(), s.counterexamples.end());
  return s;
}

std::vector<SeaweedSpec> enumerate_frobenius(int n) {
  const auto comps = compositions_of(n);
  std::vector<SeaweedSpec> out;
  for (const auto& top : comps) {
    for (const auto& bottom : comps) {
      SeaweedSpec spec(top, bottom);
      if (is_frobenius(spec)) out.push_back(std::move(spec));
    }
  }
  return out;
}

SweepRecord evaluate_spec(const SeaweedSpec& spec, bool check_unimodal) {
  SweepRecord rec = base_record(spec);
  if (!rec.frobenius) return rec;
  rec.report = analyze(spec);
  check_unbroken(rec);
  if (!verify_swap_lemma(spec)) {
    rec.proven_ok = false;
    append_note(rec.note, "swap lemma fails");
  }
  if (!verify_reverse_lemma(spec)) {
    rec.proven_ok = false;
    append_note(rec.note, "reverse lemma fails");
  }
  if (check_unimodal && !rec.report->unimodal) {
    rec.conjecture_ok = false;
    append_note(rec.note, "not unimodal: " + rec.report->spectrum.to_exponent_string());
  }
  return rec;
}

SweepResult run_unimodality_sweep(const SweepJob& job) {
  Runner runner(job);
  const bool check = job.conjecture == Conjecture::Unimodal_2_8;
  for (int n = job.n_min; n <= job.n_max; ++n) runner.run(spec_units(n, check));
  return runner.finish();
}

SweepResult run_stability_sweep(const SweepJob& job) {
  Runner runner(job);
  std::vector<Unit> units;
  switch (job.conjecture) {
    case Conjecture::Stability_4_16:
      // An n = 1 base has an empty spectrum; there is nothing to stabilize.
      for (int n = std::max(job.n_min, 2); n <= job.n_max; ++n) {
        for (const auto& base : enumerate_frobenius(n)) {
          if (base.top().parts().back() > job.k_max) continue;
          for (int r = 1; r <= job.r_max; ++r) {
            for (const bool plus_k : {false, true}) {
              const std::string key = base.to_string() + " :: " + (plus_k ? "tail+k" : "tail") +
                                      " r=" + std::to_string(r);
              units.push_back({key, [base, r, plus_k] { return evaluate_tail(base, r, plus_k); }});
            }
          }
        }
      }
      break;
    case Conjecture::Stability_4_17:
    case Conjecture::Stability_4_18: {
      const bool second = job.conjecture == Conjecture::Stability_4_17;
      for (int k = 1; k <= job.k_max; ++k) {
        for (int r = 1; r <= job.r_max; ++r) {
          const auto spec = second ? stab2_spec(k, r) : stab3_spec(k, r);
          units.push_back({spec.to_string(), [second, k, r] {
                             return second ? evaluate_stab2(k, r) : evaluate_stab3(k, r);
                           }});
        }
      }
      break;
    }
    default:
      throw DomainError("run_stability_sweep needs a stability conjecture");
  }
  runner.run(units);
  return runner.finish();
}

SweepResult run_sweep(const SweepJob& job) {
  switch (job.conjecture) {
    case Conjecture::Unimodal_2_8:
    case Conjecture::None:
      return run_unimodality_sweep(job);
    default:
      return run_stability_sweep(job);
  }
}

void persist_records(const std::vector<SweepRecord>& records, const std::string& path) {
  std::ofstream out(path, std::ios::out | std::ios::app);
  if (!out) throw SweepError("cannot write sweep output: " + path);
  for (const auto& r : records) out << r.to_json().dump() << '\n';
  if (!out) throw SweepError("write failed: " + path);
}

std::vector<SweepRecord> load_records(const std::string& path) {
  std::vector<SweepRecord> out;
  std::ifstream in(path);
  if (!in) return out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    try {
      out.push_back(SweepRecord::from_json(nlohmann::json::parse(line)));
    } catch (const std::exception& e) {
      throw SweepError(path + ":" + std::to_string(lineno) + ": corrupt record: " + e.what());
    }
  }
  return out;
}

}  // namespace seaweed
