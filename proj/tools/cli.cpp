#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "hybrid/oracle.hpp"

namespace hybrid::cli {

namespace {

struct Input {
  std::string inline_text;
  std::string file;

  std::string read() const {
    if (!inline_text.empty() && !file.empty()) {
      throw CLI::ValidationError("input", "give either -e EXPR or FILE, not both");
    }
    if (!inline_text.empty()) return inline_text;
    if (file.empty()) throw CLI::ValidationError("input", "missing input: -e EXPR or FILE");
    std::ifstream in(file);
    if (!in) throw CLI::ValidationError("input", "cannot read " + file);
    std::stringstream ss;
    ss << in.rdbuf();
    std::string text = ss.str();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
    return text;
  }
};

void add_input(CLI::App* cmd, Input& input) {
  cmd->add_option("-e,--expr", input.inline_text, "inline input");
  cmd->add_option("file", input.file, "input file");
}

ol::OlSig make_sig(const std::string& spec) {
  if (spec.empty()) return ol::OlSig::standard();
  auto comma = spec.find(',');
  if (comma == std::string::npos) {
    throw CLI::ValidationError("--sig", "expected APP,LAM constant names");
  }
  try {
    return ol::OlSig(ConId(spec.substr(0, comma)), ConId(spec.substr(comma + 1)));
  } catch (const PreconditionViolated& e) {
    throw CLI::ValidationError("--sig", e.what());
  }
}

std::string render(const Expr& e, const std::string& form, const ol::OlSig& sig) {
  if (form == "db") return to_sexpr(to_db(e));
  if (form == "named") return ol::pretty(ol::decode(e, sig));
  return to_hoas(e);
}

}  // namespace

CliResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"Higher-order abstract syntax over de Bruijn terms", "hybrid"};
  app.require_subcommand(1);

  Input input;
  std::string out_form = "hoas";
  std::string sig_spec;
  SweepConfig sweep;
  std::string mutant = "none";
  const std::vector<std::string> forms{"named", "hoas", "db"};

  auto* encode = app.add_subcommand("encode", "encode an object-language term");
  add_input(encode, input);
  encode->add_option("--out", out_form, "output form")->check(CLI::IsMember(forms));
  encode->add_option("--sig", sig_spec, "APP,LAM constant names");

  auto* decode = app.add_subcommand("decode", "decode a term (db or hoas text)");
  add_input(decode, input);
  decode->add_option("--sig", sig_spec, "APP,LAM constant names");

  auto* show = app.add_subcommand("show", "print a term (db or hoas text) in another form");
  add_input(show, input);
  show->add_option("--out", out_form, "output form")->check(CLI::IsMember(forms));
  show->add_option("--sig", sig_spec, "APP,LAM constant names");

  auto* check = app.add_subcommand("check-abstr", "classify a one-hole open term");
  add_input(check, input);

  auto* sweep_cmd = app.add_subcommand("sweep", "run the binding-law sweeps");
  sweep_cmd->add_option("--depth", sweep.depth, "exhaustive depth (random: depth + 3)")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--seed", sweep.seed, "random seed");
  sweep_cmd->add_option("--count", sweep.count, "random samples per law");
  sweep_cmd->add_option("--mutant", mutant, "inject a broken equality (testing only)")
      ->check(CLI::IsMember({"none", "var-blind"}));

  CliResult result;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::ParseError& e) {
    result.code = kUsage;
    result.err = std::string(e.what()) + "\n";
    return result;
  }

  try {
    if (*sweep_cmd) {
      sweep.mutant = mutant == "var-blind" ? Mutant::VarBlindEquality : Mutant::None;
      SweepReport report = run_sweep(sweep);
      result.out = report.text;
      result.code = report.ok ? kOk : kLawViolation;
      return result;
    }
    std::string text = input.read();
    if (*encode) {
      ol::OlSig sig = make_sig(sig_spec);
      ol::NamedTerm t = ol::parse(text);
      if (out_form == "named") {
        result.out = ol::pretty(t) + "\n";
      } else {
        result.out = render(ol::encode(t, sig), out_form, sig) + "\n";
      }
    } else if (*decode) {
      ol::OlSig sig = make_sig(sig_spec);
      result.out = ol::pretty(ol::decode(parse_term(text), sig)) + "\n";
    } else if (*show) {
      ol::OlSig sig = make_sig(sig_spec);
      result.out = render(parse_term(text), out_form, sig) + "\n";
    } else if (*check) {
      OpenTerm ot = parse_open_term(text, 1);
      if (!well_formed(ot)) {
        result.code = kDomain;
        result.err = "not a one-hole syntactic term: " + text + "\n";
        return result;
      }
      auto c = classify(reflect1(ot));
      result.out = std::string(classification_name(c)) + " / abstr: " +
                   (std::holds_alternative<shape::Exotic>(c) ? "false" : "true") + "\n";
    }
  } catch (const CLI::ValidationError& e) {
    result.code = kUsage;
    result.err = std::string(e.what()) + "\n";
  } catch (const ParseError& e) {
    result.code = kUsage;
    result.err = std::string(e.what()) + "\n";
  } catch (const Error& e) {
    result.code = kDomain;
    result.err = std::string(e.what()) + "\n";
  }
  return result;
}

}  // namespace hybrid::cli
