// pwb: command-line front end.

#include "pw/cli.hpp"

#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pw/corpus.hpp"
#include "pw/dot.hpp"
#include "pw/kernels.hpp"

namespace pw::cli {

namespace {

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    out << text;
  } else {
    write_text_file(path, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

void print_check(std::ostream& out, const Check& c) {
  out << (c.holds ? "true" : "false") << "\n";
  if (!c.holds && !c.witness.empty()) out << "witness: " << c.witness << "\n";
}

FinPriestley space_of_document(const Json& j) {
  if (j.contains("priestley")) return space_from_json(j);
  if (j.contains("birkhoff") || j.contains("elements")) return priestley_space_of(lattice_from_json(j)).space;
  return space_from_json(j);
}

Check check_space(const FinPriestley& X, const std::string& name) {
  try {
    return lspace_check(X, parse_lspace_predicate(name));
  } catch (const UnknownPredicate&) {
    return point_space_check(point_space(X), parse_point_space_predicate(name));
  }
}

Mask parse_focus(const FinPriestley& X, const std::string& text) {
  Mask m = 0;
  std::stringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) continue;
    int p = -1;
    for (int q = 0; q < X.size(); ++q)
      if (X.points().label(q) == tok || "p" + std::to_string(q) == tok) p = q;
    if (p < 0) {
      try {
        std::size_t used = 0;
        p = std::stoi(tok, &used);
        if (used != tok.size()) p = -1;
      } catch (const std::exception&) {
        p = -1;
      }
    }
    if (p < 0 || p >= X.size()) throw ParseError("unknown focus point '" + tok + "'");
    m |= bit(p);
  }
  return m;
}

void print_fixtures(std::ostream& out, bool& all_ok) {
  const std::vector<FramePredicate> cols = {
      FramePredicate::Stone,           FramePredicate::Coherent,         FramePredicate::Arithmetic,
      FramePredicate::Algebraic,       FramePredicate::CompactFrame,     FramePredicate::StablyCompact,
      FramePredicate::StablyContinuous, FramePredicate::Continuous,      FramePredicate::Regular,
      FramePredicate::ZeroDimensional,
  };
  out << std::left << std::setw(14) << "chain";
  for (FramePredicate p : cols) out << " " << std::setw(std::max<int>(5, to_string(p).size())) << to_string(p);
  out << "  claim\n";
  for (const ChainFixture& f : separating_fixtures()) {
    const ChainFrame C = ChainFrame::parse(f.word);
    out << std::left << std::setw(14) << f.word;
    for (FramePredicate p : cols)
      out << " " << std::setw(std::max<int>(5, to_string(p).size())) << (chain_predicate(C, p) ? "yes" : "no");
    std::string claim;
    bool ok = true;
    for (FramePredicate p : f.holds) {
      claim += (claim.empty() ? "" : ", ") + std::string(to_string(p));
      ok = ok && chain_predicate(C, p);
    }
    for (FramePredicate p : f.fails) {
      claim += ", not " + std::string(to_string(p));
      ok = ok && !chain_predicate(C, p);
    }
    all_ok = all_ok && ok;
    out << "  " << claim << (ok ? " [ok]" : " [FAILED]") << "\n";
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Workbench for finite frames, Priestley spaces and chain frames", "pwb"};
  app.require_subcommand(1);
  std::string kernel = "auto";
  app.add_option("--kernel", kernel, "Mask kernel backend: auto, scalar or avx2")
      ->check(CLI::IsMember({"auto", "scalar", "avx2"}));

  int max_size = 5;
  std::string out_path, in_path, object = "lattice", predicate, theorem, spec, focus;
  int jobs = 1;
  bool no_timing = false;

  auto* gen = app.add_subcommand("gen-corpus", "Enumerate posets up to isomorphism and write the corpus");
  gen->add_option("--max-size", max_size, "Largest poset size")->check(CLI::Range(0, 64));
  gen->add_option("--out", out_path, "Output file (default stdout)");

  auto* check = app.add_subcommand("check", "Evaluate a predicate on a lattice, space or chain");
  check->add_option("--in", in_path, "Input document (a lattice document is dualized for --object space)")->required();
  check->add_option("--object", object, "lattice, space or chain")
      ->check(CLI::IsMember({"lattice", "space", "chain"}));
  check->add_option("--predicate", predicate, "Predicate name")->required();

  auto* dualize = app.add_subcommand("dualize", "Compute the Priestley space and Stone map of a lattice");
  dualize->add_option("--in", in_path, "Lattice document")->required();
  dualize->add_option("--out", out_path, "Output file (default stdout)");

  auto* validate_cmd = app.add_subcommand("validate", "Run the theorem validators over a corpus");
  validate_cmd->add_option("--corpus", in_path, "Corpus file")->required();
  validate_cmd->add_option("--theorem", theorem, "Only this validator");
  validate_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1, 256));
  validate_cmd->add_flag("--no-timing", no_timing, "Report 0 micros so output is byte-stable");

  auto* chain = app.add_subcommand("chain", "Evaluate predicates on a symbolic chain");
  chain->add_option("--spec", spec, "Block word, e.g. fin:3+omega+dense")->required();
  chain->add_option("--predicate", predicate, "Predicate name (default: all)");

  auto* dot = app.add_subcommand("export-dot", "Render a Hasse diagram in Graphviz format");
  dot->add_option("--in", in_path, "Space, poset or lattice document")->required();
  dot->add_option("--focus", focus, "Comma-separated points of an upset to annotate");
  dot->add_option("--out", out_path, "Output file (default stdout)");

  auto* fixtures = app.add_subcommand("fixtures", "Print the separating chain fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    struct BackendGuard {
      bool forced = false;
      ~BackendGuard() {
        if (forced) kernels::reset_backend();
      }
    } guard;
    if (kernel != "auto") {
      kernels::force_backend(kernel == "scalar" ? kernels::Backend::Scalar : kernels::Backend::Avx2);
      guard.forced = true;
    }

    if (*gen) {
      emit(out, out_path, dump(corpus_to_json(gen_corpus(max_size))));
      return kOk;
    }
    if (*check) {
      const Json doc = read_json_file(in_path);
      if (object == "lattice") {
        const FinDLat L = lattice_from_json(doc);
        L.validate_distributive();
        print_check(out, frame_check(L, parse_frame_predicate(predicate)));
      } else if (object == "space") {
        print_check(out, check_space(space_of_document(doc), predicate));
      } else {
        print_check(out, chain_check(chain_from_json(doc), parse_frame_predicate(predicate)));
      }
      return kOk;
    }
    if (*dualize) {
      const FinDLat L = lattice_from_json(read_json_file(in_path));
      L.validate_distributive();
      emit(out, out_path, dump(stone_record_to_json(priestley_space_of(L))));
      return kOk;
    }
    if (*validate_cmd) {
      const Corpus c = corpus_from_json(read_json_file(in_path));
      std::vector<Validator> vs = all_validators();
      if (!theorem.empty()) vs = {parse_validator(theorem)};
      Json report = Json::array();
      bool all_pass = true;
      for (const ValidationReport& r : run_validators(c, vs, jobs)) {
        all_pass = all_pass && r.pass;
        report.push_back(report_to_json(r, !no_timing));
      }
      out << dump(report);
      return all_pass ? kOk : kCounterexample;
    }
    if (*chain) {
      const ChainFrame C = ChainFrame::parse(spec);
      if (!predicate.empty()) {
        print_check(out, chain_check(C, parse_frame_predicate(predicate)));
      } else {
        for (FramePredicate p : all_frame_predicates())
          out << to_string(p) << ": " << (chain_predicate(C, p) ? "true" : "false") << "\n";
      }
      return kOk;
    }
    if (*dot) {
      const FinPriestley X = space_of_document(read_json_file(in_path));
      std::optional<Mask> f;
      if (!focus.empty()) f = parse_focus(X, focus);
      emit(out, out_path, export_dot(X, f));
      return kOk;
    }
    if (*fixtures) {
      bool ok = true;
      print_fixtures(out, ok);
      return ok ? kOk : kCounterexample;
    }
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << "\n";
    return kCapacity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace pw::cli
