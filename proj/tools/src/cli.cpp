#include "sabotage/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <thread>

#include "sabotage/alba.hpp"
#include "sabotage/parser.hpp"
#include "sabotage/printer.hpp"
#include "sabotage/sahlqvist.hpp"
#include "sabotage/semantics.hpp"
#include "sabotage/syntax.hpp"

namespace sabotage {

namespace {

using json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string strip_comment(const std::string& line) { return line.substr(0, line.find('#')); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<CorpusEntry> parse_corpus(const std::string& content) {
  std::vector<CorpusEntry> out;
  std::istringstream in(content);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string text = trim(strip_comment(raw));
    if (text.empty()) continue;
    std::string label;
    if (const auto colon = text.find(':'); colon != std::string::npos) {
      label = trim(text.substr(0, colon));
      text = trim(text.substr(colon + 1));
      if (label.empty()) throw std::invalid_argument("line " + std::to_string(line) + ": empty label");
      if (text.empty()) throw std::invalid_argument("line " + std::to_string(line) + ": missing formula");
    }
    try {
      Ineq i = parse_inequality(text);
      out.push_back(CorpusEntry{label.empty() ? text : label, line, text, std::move(i)});
    } catch (const ParseError& e) {
      throw std::invalid_argument("line " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) { return parse_corpus(read_file(path)); }

FrameCheck check_correspondent(const Ineq& input, const FOFormula& fo, int max_worlds) {
  if (max_worlds < 1 || max_worlds > kMaxWorldsCap) throw std::invalid_argument("max-worlds must be in 1..4");
  const CompiledFO compiled(fo);
  if (!compiled.free_names().empty() || !compiled.predicates().empty()) {
    throw std::invalid_argument("the correspondent is not a closed pure sentence");
  }
  const Statement stmt{input};
  const unsigned threads = std::clamp(std::thread::hardware_concurrency(), 1u, 16u);

  FrameCheck report;
  for (int n = 1; n <= max_worlds; ++n) {
    const auto frames = enumerate_frames(n, kMaxWorldsCap);
    constexpr std::size_t kChunk = 32;
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> first_bad{frames.size()};
    auto worker = [&] {
      for (;;) {
        const std::size_t start = next.fetch_add(kChunk);
        if (start >= frames.size() || start >= first_bad.load()) return;
        const std::size_t stop = std::min(start + kChunk, frames.size());
        for (std::size_t k = start; k < stop; ++k) {
          if (frame_valid(frames[k], stmt) != compiled.eval(frames[k], {}, {})) {
            std::size_t seen = first_bad.load();
            while (k < seen && !first_bad.compare_exchange_weak(seen, k)) {
            }
            break;
          }
        }
      }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads && frames.size() > kChunk; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    const std::size_t bad = first_bad.load();
    if (bad < frames.size()) {
      report.frames += static_cast<int>(bad) + 1;
      report.per_size.push_back(static_cast<int>(bad) + 1);
      report.counterexample = frames[bad];
      report.modal_valid = frame_valid(frames[bad], stmt);
      return report;
    }
    report.frames += static_cast<int>(frames.size());
    report.per_size.push_back(static_cast<int>(frames.size()));
  }
  return report;
}

namespace {

struct Options {
  std::string formula;
  std::string file;
  int max_worlds = 3;
  std::string format = "text";
  std::string trace;
  std::string order_type;
};

/// Signals an exit with a status after the message has been written.
struct Exit {
  int code;
};

[[noreturn]] void input_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << "\n";
  throw Exit{kExitInputError};
}

std::string read_input(const Options& o, std::ostream& err) {
  if (!o.formula.empty()) return o.formula;
  if (o.file.empty()) input_error(err, "one of --formula or --file is required");
  std::string content;
  try {
    content = read_file(o.file);
  } catch (const std::invalid_argument& e) {
    input_error(err, e.what());
  }
  std::istringstream in(content);
  std::string line;
  std::string joined;
  while (std::getline(in, line)) joined += strip_comment(line) + " ";
  joined = trim(joined);
  if (joined.empty()) input_error(err, "'" + o.file + "' contains no formula");
  return joined;
}

Ineq parse_input(const Options& o, std::ostream& err) {
  const std::string text = read_input(o, err);
  try {
    return parse_inequality(text);
  } catch (const ParseError& e) {
    input_error(err, std::string("parse error: ") + e.what());
  }
}

FOFormat format_of(const Options& o, std::ostream& err, bool allow_tptp) {
  FOFormat f{};
  try {
    f = parse_fo_format(o.format);
  } catch (const std::invalid_argument& e) {
    input_error(err, e.what());
  }
  if (f == FOFormat::Tptp && !allow_tptp) input_error(err, "--format tptp applies to correspond only");
  return f;
}

std::optional<OrderType> forced_order(const Options& o, std::ostream& err) {
  if (o.order_type.empty()) return std::nullopt;
  try {
    return parse_order_type(o.order_type);
  } catch (const std::invalid_argument& e) {
    input_error(err, std::string("bad --order-type: ") + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content, std::ostream& err) {
  std::ofstream f(path);
  if (!f) input_error(err, "cannot write '" + path + "'");
  f << content << "\n";
}

std::string order_text(const std::optional<OrderType>& eps) { return eps ? to_string(*eps) : "none"; }

json order_json(const std::optional<OrderType>& eps) { return eps ? json(to_string(*eps)) : json(nullptr); }

std::vector<std::string> quasi_strings(const std::vector<QuasiUQ>& out) {
  std::vector<std::string> v;
  for (const auto& q : out) v.push_back(to_string(q));
  return v;
}

std::string frame_counts(const FrameCheck& c) {
  std::string s;
  for (std::size_t k = 0; k < c.per_size.size(); ++k) {
    s += (k ? ", " : "") + std::string("n=") + std::to_string(k + 1) + ": " + std::to_string(c.per_size[k]);
  }
  return s;
}

// ---- subcommands

int cmd_parse(const Options& o, std::ostream& out, std::ostream& err) {
  const FOFormat fmt = format_of(o, err, false);
  const Ineq i = parse_input(o, err);
  if (fmt == FOFormat::Json) {
    json j;
    j["inequality"] = to_string(i);
    j["lhs"] = print_formula(i.lhs);
    j["rhs"] = print_formula(i.rhs);
    const auto vars = props(Statement{i});
    j["variables"] = std::vector<std::string>(vars.begin(), vars.end());
    out << j.dump(2) << "\n";
  } else {
    out << to_string(i) << "\n";
  }
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out, std::ostream& err) {
  const FOFormat fmt = format_of(o, err, false);
  const Ineq i = parse_input(o, err);
  const auto forced = forced_order(o, err);
  Classification c;
  try {
    c = classify(i, forced);
  } catch (const std::invalid_argument& e) {
    input_error(err, e.what());
  }

  if (fmt == FOFormat::Json) {
    json j;
    j["input"] = to_string(i);
    j["sahlqvist"] = c.sahlqvist;
    j["order_type"] = order_json(c.order_type);
    json branches = json::array();
    for (const auto& b : c.branches) {
      branches.push_back({{"side", b.side},
                          {"variable", b.branch.var},
                          {"path", describe(b.branch)},
                          {"critical", b.critical},
                          {"excellent", b.excellent}});
    }
    j["branches"] = branches;
    out << j.dump(2) << "\n";
  } else {
    out << "verdict: " << (c.sahlqvist ? "sahlqvist" : "not sahlqvist") << "\n";
    out << "order-type: " << order_text(c.order_type) << "\n";
    std::map<std::string, std::vector<const BranchReport*>> by_var;
    for (const auto& b : c.branches) by_var[b.branch.var].push_back(&b);
    for (const auto& [var, bs] : by_var) {
      const auto critical = std::count_if(bs.begin(), bs.end(), [](auto* b) { return b->critical; });
      const auto excellent = std::count_if(bs.begin(), bs.end(), [](auto* b) { return b->critical && b->excellent; });
      out << var << ": " << bs.size() << " branches, " << critical << " critical, " << excellent
          << " excellent\n";
      for (const auto* b : bs) {
        out << "  " << b->side << "  " << describe(b->branch);
        if (b->critical) out << (b->excellent ? "  [critical, excellent]" : "  [critical, NOT excellent]");
        out << "\n";
      }
    }
  }
  return c.sahlqvist ? kExitOk : kExitFailure;
}

void report_failure(const AlbaResult& r, FOFormat fmt, std::ostream& out) {
  const auto& f = *r.failure;
  if (fmt == FOFormat::Json) {
    json j;
    j["success"] = false;
    j["input"] = to_string(r.input);
    j["stage"] = f.stage;
    j["reason"] = f.reason;
    j["item"] = f.item ? json(to_string(*f.item)) : json(nullptr);
    out << j.dump(2) << "\n";
    return;
  }
  out << "failure at stage " << f.stage << ": " << f.reason << "\n";
  if (f.item) out << "  stuck item: " << to_string(*f.item) << "\n";
}

int cmd_correspond(const Options& o, std::ostream& out, std::ostream& err) {
  const FOFormat fmt = format_of(o, err, true);
  const Ineq i = parse_input(o, err);
  const auto forced = forced_order(o, err);
  const AlbaResult r = run_alba(i, forced);
  if (!o.trace.empty()) write_text_file(o.trace, trace_to_json(r.trace), err);
  if (!r.success) {
    report_failure(r, fmt, out);
    return kExitFailure;
  }
  const FOFormula fo = correspondent(r.output);
  switch (fmt) {
    case FOFormat::Text:
      out << "order-type: " << order_text(r.order_type) << "\n";
      out << "pure output:\n";
      for (const auto& q : quasi_strings(r.output)) out << "  " << q << "\n";
      out << "first-order correspondent:\n  " << emit_fo(fo, FOFormat::Text) << "\n";
      break;
    case FOFormat::Json: {
      json j;
      j["success"] = true;
      j["input"] = to_string(i);
      j["order_type"] = order_json(r.order_type);
      j["output"] = quasi_strings(r.output);
      j["correspondent"] = json::parse(emit_fo(fo, FOFormat::Json));
      out << j.dump(2) << "\n";
      break;
    }
    case FOFormat::Tptp:
      out << "% input: " << to_string(i) << "\n";
      for (const auto& q : quasi_strings(r.output)) out << "% output: " << q << "\n";
      out << emit_fo(fo, FOFormat::Tptp) << "\n";
      break;
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const FOFormat fmt = format_of(o, err, false);
  const Ineq i = parse_input(o, err);
  const auto forced = forced_order(o, err);
  const AlbaResult r = run_alba(i, forced);
  if (!o.trace.empty()) write_text_file(o.trace, trace_to_json(r.trace), err);
  if (!r.success) {
    out << "cannot verify: no correspondent\n";
    report_failure(r, FOFormat::Text, out);
    return kExitFailure;
  }
  const FrameCheck c = check_correspondent(i, correspondent(r.output), o.max_worlds);
  if (fmt == FOFormat::Json) {
    json j;
    j["input"] = to_string(i);
    j["passed"] = c.passed();
    j["frames"] = c.frames;
    j["per_size"] = c.per_size;
    if (c.counterexample) {
      j["counterexample"] = json::parse(to_json(*c.counterexample));
      j["frame_valid"] = c.modal_valid;
      j["correspondent"] = !c.modal_valid;
    }
    out << j.dump(2) << "\n";
  } else if (c.passed()) {
    out << "PASS: " << c.frames << " frames (" << frame_counts(c) << ")\n";
  } else {
    out << "FAIL: counterexample " << to_literal(*c.counterexample) << ": frame valid "
        << (c.modal_valid ? "yes" : "no") << ", correspondent " << (c.modal_valid ? "no" : "yes") << "\n";
  }
  return c.passed() ? kExitOk : kExitFailure;
}

int cmd_corpus(const Options& o, std::ostream& out, std::ostream& err) {
  const FOFormat fmt = format_of(o, err, false);
  if (o.file.empty()) input_error(err, "corpus needs --file");
  if (!o.order_type.empty()) input_error(err, "--order-type does not apply to corpus runs");
  std::vector<CorpusEntry> entries;
  try {
    entries = load_corpus(o.file);
  } catch (const std::invalid_argument& e) {
    input_error(err, o.file + ": " + e.what());
  }

  struct Row {
    const CorpusEntry* entry;
    Classification cls;
    std::optional<AlbaResult> alba;
    std::optional<FrameCheck> check;
  };
  std::vector<Row> rows;
  bool all_ok = true;
  json traces = json::array();
  for (const auto& e : entries) {
    Row row{&e, classify(e.ineq), std::nullopt, std::nullopt};
    row.alba = run_alba(e.ineq);
    if (row.alba->success) {
      row.check = check_correspondent(e.ineq, correspondent(row.alba->output), o.max_worlds);
      if (!row.check->passed()) all_ok = false;
    } else if (row.cls.sahlqvist) {
      all_ok = false;
    }
    if (!o.trace.empty()) traces.push_back({{"label", e.label}, {"trace", json::parse(trace_to_json(row.alba->trace))}});
    rows.push_back(std::move(row));
  }
  if (!o.trace.empty()) write_text_file(o.trace, traces.dump(2), err);

  auto alba_cell = [](const Row& r) { return r.alba->success ? std::string("ok") : "fail(" + r.alba->failure->stage + ")"; };
  auto verify_cell = [](const Row& r) {
    if (!r.check) return std::string("-");
    return (r.check->passed() ? "PASS/" : "FAIL/") + std::to_string(r.check->frames);
  };

  const auto verified = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.check && r.check->passed(); });
  const auto sahlqvist = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.cls.sahlqvist; });
  const auto succeeded = std::count_if(rows.begin(), rows.end(), [](const Row& r) { return r.alba->success; });

  if (fmt == FOFormat::Json) {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({{"label", r.entry->label},
                     {"line", r.entry->line},
                     {"input", to_string(r.entry->ineq)},
                     {"sahlqvist", r.cls.sahlqvist},
                     {"order_type", order_json(r.cls.order_type)},
                     {"alba", alba_cell(r)},
                     {"verify", verify_cell(r)}});
    }
    json j;
    j["entries"] = arr;
    j["summary"] = {{"entries", rows.size()}, {"sahlqvist", sahlqvist}, {"succeeded", succeeded}, {"verified", verified}};
    out << j.dump(2) << "\n";
  } else {
    std::size_t w_label = 5;
    std::size_t w_order = 10;
    for (const auto& r : rows) {
      w_label = std::max(w_label, r.entry->label.size());
      w_order = std::max(w_order, order_text(r.cls.order_type).size());
    }
    out << std::left << std::setw(static_cast<int>(w_label)) << "label" << "  " << std::setw(9) << "sahlqvist"
        << "  " << std::setw(static_cast<int>(w_order)) << "order-type" << "  " << std::setw(20) << "alba"
        << "  verify\n";
    for (const auto& r : rows) {
      out << std::setw(static_cast<int>(w_label)) << r.entry->label << "  " << std::setw(9)
          << (r.cls.sahlqvist ? "yes" : "no") << "  " << std::setw(static_cast<int>(w_order))
          << order_text(r.cls.order_type) << "  " << std::setw(20) << alba_cell(r) << "  " << verify_cell(r) << "\n";
    }
    out << rows.size() << " entries: " << sahlqvist << " sahlqvist, " << succeeded << " succeeded, " << verified
        << " verified up to " << o.max_worlds << " worlds\n";
  }
  return all_ok ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Correspondence theory for sabotage modal logic", "sabotage"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub, bool needs_input) {
    auto* formula = sub->add_option("--formula", o.formula, "Formula or `phi <= psi`");
    auto* file = sub->add_option("--file", o.file, needs_input ? "File holding the formula" : "Corpus file");
    formula->excludes(file);
    sub->add_option("--max-worlds", o.max_worlds, "Largest frame size to enumerate (1..4)")
        ->check(CLI::Range(1, kMaxWorldsCap));
    sub->add_option("--format", o.format, "text, json or tptp");
    sub->add_option("--trace", o.trace, "Write the derivation trace as JSON");
    sub->add_option("--order-type", o.order_type, "Force an order-type, e.g. p=1,q=d");
  };
  auto* parse = app.add_subcommand("parse", "Parse and print an inequality");
  auto* cls = app.add_subcommand("classify", "Sahlqvist classification with branch diagnostics");
  auto* corr = app.add_subcommand("correspond", "Run ALBA and print the first-order correspondent");
  auto* verify = app.add_subcommand("verify", "Check the correspondent against frame validity");
  auto* corpus = app.add_subcommand("corpus", "Classify, correspond and verify every corpus entry");
  for (auto* s : {parse, cls, corr, verify}) add_common(s, true);
  add_common(corpus, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*parse) return cmd_parse(o, out, err);
    if (*cls) return cmd_classify(o, out, err);
    if (*corr) return cmd_correspond(o, out, err);
    if (*verify) return cmd_verify(o, out, err);
    return cmd_corpus(o, out, err);
  } catch (const Exit& e) {
    return e.code;
  }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"sabotage"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace sabotage
