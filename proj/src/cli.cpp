#include "zetalab/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "zetalab/document.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/families.hpp"

namespace zetalab::cli {

namespace fs = std::filesystem;

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "xn-N1", "xn-N4", "xn-N6", "xy-d2-N1-Np1", "xy-d2-N2-Np3", "xy-d3-N1-Np2",
      "cusp", "pq-p2-q5", "pq-p2-q7", "pq-p3-q4", "pq-p3-q5", "pq-p3-q7", "pq-p4-q5", "pq-p4-q7", "pq-p5-q6", "pq-p5-q7", "pq-p6-q7",
      "twopair",
      "fermat-d3", "fermat-d4", "fermat-d5", "fermat-d6",
      "morse-n2", "morse-n4", "morse-n6"};
  return names;
}

namespace {

struct Options {
  std::string input;
  std::string family;
  std::string params;
  std::string fixture;
  std::vector<std::string> forms;
  std::string form_set;
  std::string target;
  int radius = 4;
  bool global = false;
  bool pretty = false;
  std::string output;
  std::string dir;
};

std::int64_t parse_int(std::string_view s, const std::string& what) {
  std::int64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw ValidationError("not an integer in " + what + ": \"" + std::string(s) + "\"");
  return v;
}

// "2,3" binds positionally; "d=4" or "p=2,q=3" by name.
std::map<std::string, std::int64_t> parse_params(const std::string& family, const std::string& text) {
  const auto names = family_params(family);
  std::map<std::string, std::int64_t> out;
  std::size_t pos = 0;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (auto eq = item.find('='); eq != std::string::npos) {
      out[item.substr(0, eq)] = parse_int(std::string_view(item).substr(eq + 1), "--params");
    } else {
      if (pos >= names.size()) throw ValidationError("too many parameters for family " + family);
      out[names[pos++]] = parse_int(item, "--params");
    }
  }
  return out;
}

// "fermat-d4" -> fermat with d = 4.
Family fixture_family(const std::string& name) {
  if (std::find(fixture_names().begin(), fixture_names().end(), name) == fixture_names().end())
    throw ValidationError("unknown fixture \"" + name + "\"");
  std::stringstream ss(name);
  std::string family, part;
  std::getline(ss, family, '-');
  std::map<std::string, std::int64_t> params;
  while (std::getline(ss, part, '-')) {
    auto split = std::find_if(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); });
    params[std::string(part.begin(), split)] = parse_int(std::string(split, part.end()), "fixture name");
  }
  return make_family(family, params);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void require_valid(const ResolutionData& rd) {
  auto v = validate(rd);
  if (v.empty()) return;
  std::string msg = "invalid resolution data: " + v.front();
  for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
  throw ValidationError(msg);
}

struct Input {
  ResolutionData rd;
  std::optional<Family> family;
  std::optional<BlowupProgram> program;
};

Input load(const Options& o) {
  const int sources = !o.input.empty() + !o.family.empty() + !o.fixture.empty();
  if (sources != 1) throw ValidationError("give exactly one of an input file, --family or --fixture");
  Input in;
  if (!o.family.empty()) in.family = make_family(o.family, parse_params(o.family, o.params));
  else if (!o.fixture.empty()) in.family = fixture_family(o.fixture);
  if (in.family) {
    in.rd = in.family->data;
    in.program = in.family->program;
    return in;
  }
  const std::string text = read_file(o.input);
  if (fs::path(o.input).extension() == ".blow") {
    in.program = parse_program(text);
    in.rd = resolve_program(*in.program);
  } else {
    in.rd = parse_resdata(text);
  }
  require_valid(in.rd);
  return in;
}

CurvetteMatrix curvettes(const ResolutionData& rd) {
  if (rd.curvette_matrix) return *rd.curvette_matrix;
  if (rd.indices_of(ComponentKind::exceptional).empty()) return CurvetteMatrix();
  throw ValidationError("resolution data carries no curvette_matrix");
}

FormSpec load_form(const Input& in, const std::string& spec) {
  if (fs::is_regular_file(spec)) return parse_form(read_file(spec));
  if (spec.starts_with('{')) return parse_form(spec);
  if (!in.family) throw ValidationError("form \"" + spec + "\" is neither a file nor usable without --family");
  return named_form(*in.family, spec);
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ValidationError("cannot write " + o.output);
  f << text;
}

std::string pretty_zeta(const ZetaResult& z) {
  std::ostringstream os;
  os << "Z = " << z.rf.str() << "\n  = " << display(z) << "\n";
  for (const auto& p : z.poles) os << "pole " << p.s0 << " order " << p.order << " leading " << p.leading << "\n";
  return os.str();
}

int cmd_resolve(const Options& o, std::ostream& out) {
  Input in = load(o);
  if (!in.program) throw ValidationError("resolve needs a blow-up program");
  if (auto v = n_consistency_violations(*in.program); !v.empty()) throw ValidationError(v.front());
  emit(o, serialize(in.rd), out);
  return ok;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  Input in = load(o);
  if (o.forms.size() > 1) throw ValidationError("zeta takes at most one --form");
  ResolutionData rd = in.rd;
  if (!o.forms.empty()) rd = apply_form(rd, curvettes(rd), load_form(in, o.forms.front()));
  const auto z = topological_zeta(rd, !o.global);
  emit(o, o.pretty ? pretty_zeta(z) : dump(to_json(z)), out);
  return ok;
}

int cmd_monodromy(const Options& o, std::ostream& out) {
  const auto r = eigenvalue_report(load(o).rd);
  if (o.pretty) {
    std::ostringstream os;
    os << "zeta = " << r.zeta.str() << "\neigenvalue orders:";
    for (auto d : r.eigenvalue_orders) os << " " << d;
    os << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, dump(to_json(r)), out);
  }
  return ok;
}

int cmd_realize(const Options& o, std::ostream& out) {
  Input in = load(o);
  if (o.target.empty()) throw ValidationError("realize needs --target u/d");
  const RootOfUnity target(BigRational::parse(o.target));
  const auto cert = realize(in.rd, curvettes(in.rd), target, o.radius);
  if (o.pretty) {
    std::ostringstream os;
    os << "target " << cert.target.str() << " via " << cert.j0 << ": s0 = " << cert.s0 << " (order " << cert.pole_order
       << ", leading " << cert.residue << ")\nform:";
    for (const auto& t : cert.form.terms) os << " " << t.host << "^" << t.m << (t.copies > 1 ? "x" + std::to_string(t.copies) : "");
    os << "\n" << pretty_zeta(cert.zeta);
    emit(o, os.str(), out);
  } else {
    emit(o, dump(to_json(cert)), out);
  }
  return ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Input in = load(o);
  std::vector<std::pair<std::string, FormSpec>> forms;
  if (!o.form_set.empty()) {
    if (!in.family) throw ValidationError("--form-set needs --family or --fixture");
    forms = named_form_set(*in.family, o.form_set);
  }
  for (const auto& f : o.forms) forms.emplace_back(f, load_form(in, f));
  if (forms.empty()) throw ValidationError("verify-principle needs --form or --form-set");
  const auto r = verify_principle(in.rd, curvettes(in.rd), forms);
  if (o.pretty) {
    std::ostringstream os;
    os << "(1) poles are eigenvalues: " << (r.poles_are_eigenvalues ? "yes" : "no") << "\n"
       << "(2) eigenvalues are poles: " << (r.eigenvalues_hit ? "yes" : "no") << "\n";
    for (const auto& [lambda, w] : r.witnesses) os << "  " << lambda.str() << " <- " << w.form << " s0 = " << w.s0 << "\n";
    for (const auto& m : r.missing) os << "  missing " << m.str() << "\n";
    for (const auto& w : r.stray_poles) os << "  stray " << w.s0 << " from " << w.form << "\n";
    emit(o, os.str(), out);
  } else {
    emit(o, dump(to_json(r)), out);
  }
  return ok;
}

int cmd_fixtures(const Options& o, std::ostream& out) {
  if (o.dir.empty()) {
    for (const auto& n : fixture_names()) out << n << "\n";
    return ok;
  }
  fs::create_directories(o.dir);
  for (const auto& n : fixture_names()) {
    const Family f = fixture_family(n);
    std::ofstream(fs::path(o.dir) / (n + ".resdata"), std::ios::binary) << serialize(f.data);
    if (f.program) std::ofstream(fs::path(o.dir) / (n + ".blow"), std::ios::binary) << dump(to_json(*f.program));
  }
  out << "wrote " << fixture_names().size() << " fixtures to " << o.dir << "\n";
  return ok;
}

void error_doc(std::ostream& err, const char* kind, const std::string& message) {
  err << dump(Json{{"error", {{"kind", kind}, {"message", message}}}});
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monodromy and topological zeta functions of resolution data", "zetalab"};
  app.require_subcommand(1);
  Options o;

  auto source = [&](CLI::App* c) {
    c->add_option("input", o.input, "input .resdata or .blow document");
    c->add_option("--family", o.family, "named family: xn, xy, pq, cusp, twopair, fermat, morse");
    c->add_option("--params", o.params, "family parameters, e.g. 2,3 or d=4");
    c->add_option("--fixture", o.fixture, "named fixture, see the fixtures command");
    c->add_option("-o,--output", o.output, "write the document here instead of stdout");
    c->add_flag("--pretty", o.pretty, "human readable text instead of JSON");
  };
  auto* resolve = app.add_subcommand("resolve", "blow-up program to resolution data");
  source(resolve);
  auto* zeta = app.add_subcommand("zeta", "topological zeta function");
  source(zeta);
  zeta->add_option("--form", o.forms, "form file, inline JSON, or selector such as omega_ij:i=2,j=1");
  zeta->add_flag("--global", o.global, "use chi_global instead of chi_local");
  zeta->add_flag("--local", [&](std::int64_t) { o.global = false; }, "use chi_local (default)");
  auto* mono = app.add_subcommand("monodromy", "A'Campo zeta function and eigenvalue orders");
  source(mono);
  auto* real = app.add_subcommand("realize", "realize an eigenvalue as a pole");
  source(real);
  real->add_option("--target", o.target, "eigenvalue as a fraction of a turn u/d")->required();
  real->add_option("--radius", o.radius, "lattice search radius K")->check(CLI::NonNegativeNumber);
  auto* verify = app.add_subcommand("verify-principle", "check poles against eigenvalues for a set of forms");
  source(verify);
  verify->add_option("--form", o.forms, "form document or selector (repeatable)");
  verify->add_option("--form-set", o.form_set, "named form set of the family");
  auto* fixtures = app.add_subcommand("fixtures", "list or write the example corpus");
  fixtures->add_option("--dir", o.dir, "directory to write the corpus into");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid;
  }

  try {
    if (resolve->parsed()) return cmd_resolve(o, out);
    if (zeta->parsed()) return cmd_zeta(o, out);
    if (mono->parsed()) return cmd_monodromy(o, out);
    if (real->parsed()) return cmd_realize(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (fixtures->parsed()) return cmd_fixtures(o, out);
  } catch (const ValidationError& e) {
    error_doc(err, "validation", e.what());
    return invalid;
  } catch (const NotRealizable& e) {
    error_doc(err, "not-realizable", e.what());
    return not_realizable;
  } catch (const RadiusExhausted& e) {
    error_doc(err, "radius-exhausted", e.what());
    return radius_exhausted;
  } catch (const std::exception& e) {
    error_doc(err, "error", e.what());
    return failure;
  }
  return failure;
}

}  // namespace zetalab::cli
