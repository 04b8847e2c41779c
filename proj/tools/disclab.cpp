// disclab: discriminators, index of appearance, and S-unit tools for the
// Lucas family U_{n+2}(k) = (4k+2) U_{n+1}(k) - U_n(k).
//
// Output contract: JSON emits {config, results, diagnostics}; integers wider
// than 64 bits are decimal strings. CSV is RFC-4180 with a mandatory header
// row (nested values serialized as compact JSON in a quoted cell). Text is an
// aligned table preceded by a "# config" echo line; CSV sends that echo to
// stderr so stdout stays a pure table.
//
// Exit codes: 0 success, 1 usage, 2 computation capacity exceeded,
// 3 internal inconsistency (a closed form disagreed with the oracle).

#include "disclab/disclab.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using disclab::Int;
using json = nlohmann::ordered_json;

json int_json(const Int& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

const char* method_name(disclab::disc_method m) {
  switch (m) {
    case disclab::disc_method::brute: return "brute";
    case disclab::disc_method::closed_k1: return "closed_k1";
    case disclab::disc_method::closed_k2: return "closed_k2";
    case disclab::disc_method::closed_general: return "closed_general";
    case disclab::disc_method::auto_dispatch: return "auto";
  }
  return "?";
}

const char* class_name(disclab::disc_class c) {
  switch (c) {
    case disclab::disc_class::power_of_two: return "power_of_two";
    case disclab::disc_class::two_a_five_b: return "two_a_five_b";
    case disclab::disc_class::in_A: return "in_A";
    case disclab::disc_class::in_B: return "in_B";
    case disclab::disc_class::exceptional_candidate: return "exceptional_candidate";
  }
  return "?";
}

struct Document {
  json config = json::object();
  std::vector<std::string> columns;
  std::vector<json> rows;
  std::vector<std::string> diagnostics;
  std::string text_body;  // non-empty: replaces the generic table in text mode
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out += ch;
  }
  out += '"';
  return out;
}

std::string cell_text(const json& v) {
  if (v.is_null()) return "";
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  return v.dump();
}

std::string render_json(const Document& doc) {
  json root;
  root["config"] = doc.config;
  root["results"] = json::array();
  for (const json& row : doc.rows) root["results"].push_back(row);
  root["diagnostics"] = doc.diagnostics;
  return root.dump(2) + "\n";
}

std::string render_csv(const Document& doc) {
  std::string out;
  for (std::size_t i = 0; i < doc.columns.size(); ++i) {
    if (i) out += ',';
    out += csv_escape(doc.columns[i]);
  }
  out += "\r\n";
  for (const json& row : doc.rows) {
    for (std::size_t i = 0; i < doc.columns.size(); ++i) {
      if (i) out += ',';
      out += csv_escape(cell_text(row.contains(doc.columns[i]) ? row[doc.columns[i]] : json()));
    }
    out += "\r\n";
  }
  return out;
}

std::string render_text(const Document& doc) {
  std::string out = "# config " + doc.config.dump() + "\n";
  if (!doc.text_body.empty()) {
    out += doc.text_body;
  } else {
    std::vector<std::size_t> width(doc.columns.size());
    for (std::size_t i = 0; i < doc.columns.size(); ++i) width[i] = doc.columns[i].size();
    std::vector<std::vector<std::string>> cells;
    cells.reserve(doc.rows.size());
    for (const json& row : doc.rows) {
      std::vector<std::string> line;
      for (std::size_t i = 0; i < doc.columns.size(); ++i) {
        line.push_back(cell_text(row.contains(doc.columns[i]) ? row[doc.columns[i]] : json()));
        width[i] = std::max(width[i], line.back().size());
      }
      cells.push_back(std::move(line));
    }
    auto pad_row = [&](const std::vector<std::string>& line) {
      std::string s;
      for (std::size_t i = 0; i < line.size(); ++i) {
        if (i) s += "  ";
        s += line[i];
        if (i + 1 < line.size()) s.append(width[i] - line[i].size(), ' ');
      }
      s += '\n';
      return s;
    };
    out += pad_row(doc.columns);
    for (const auto& line : cells) out += pad_row(line);
    if (doc.rows.empty()) out += "(empty)\n";
  }
  for (const std::string& d : doc.diagnostics) out += "# " + d + "\n";
  return out;
}

struct GlobalOpts {
  std::string k = "1";
  std::string format = "text";
  unsigned precision_bits = 192;
  std::uint64_t factor_bound = 10'000'000;
  unsigned threads = 0;
  std::string out_path;
};

void emit(const Document& doc, const GlobalOpts& g) {
  std::string payload;
  if (g.format == "json") {
    payload = render_json(doc);
  } else if (g.format == "csv") {
    std::cerr << "# config " << doc.config.dump() << "\n";
    for (const std::string& d : doc.diagnostics) std::cerr << "# " << d << "\n";
    payload = render_csv(doc);
  } else {
    payload = render_text(doc);
  }
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot open output file: " + g.out_path);
    f << payload;
  } else {
    std::cout << payload;
  }
}

Int parse_big(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument(std::string(what) + ": not a nonnegative decimal integer: " + s);
  return Int(s);
}

std::uint64_t parse_u64(const std::string& s, const char* what) {
  Int v = parse_big(s, what);
  if (!disclab::fits_u64(v)) throw std::invalid_argument(std::string(what) + ": out of range: " + s);
  return disclab::to_u64(v);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& s, const char* what) {
  auto dots = s.find("..");
  if (dots == std::string::npos)
    throw std::invalid_argument(std::string(what) + ": expected A..B, got: " + s);
  std::uint64_t a = parse_u64(s.substr(0, dots), what);
  std::uint64_t b = parse_u64(s.substr(dots + 2), what);
  if (a > b) throw std::invalid_argument(std::string(what) + ": empty range: " + s);
  return {a, b};
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

json base_config(const char* command, const GlobalOpts& g, bool with_k = true) {
  json cfg;
  cfg["command"] = command;
  if (with_k) cfg["k"] = int_json(parse_big(g.k, "--k"));
  cfg["format"] = g.format;
  cfg["precision_bits"] = g.precision_bits;
  cfg["factor_bound"] = g.factor_bound;
  return cfg;
}

json disc_row(const disclab::DiscriminatorRecord& r) {
  json row;
  row["k"] = int_json(r.k);
  row["n"] = r.n;
  row["value"] = int_json(r.value);
  row["method"] = method_name(r.method);
  row["classification"] = class_name(r.classification);
  row["certified"] = r.certified;
  row["candidate"] = r.candidate ? int_json(*r.candidate) : json();
  return row;
}

const std::vector<std::string> disc_columns = {"k",              "n",         "value", "method",
                                               "classification", "certified", "candidate"};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "discriminators, index of appearance, and S-unit tools for the Lucas family\n"
      "U_{n+2}(k) = (4k+2) U_{n+1}(k) - U_n(k)"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("-k,--k", g.k, "family parameter k >= 1")->capture_default_str();
  app.add_option("--format", g.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--precision-bits", g.precision_bits, "fixed-point precision for the M-set test")
      ->capture_default_str();
  app.add_option("--factor-bound", g.factor_bound, "largest factor searched before giving up")
      ->capture_default_str();
  app.add_option("--threads", g.threads,
                 "worker threads (0 = DISCLAB_THREADS env, then hardware)");
  app.add_option("--out", g.out_path, "write output to this file instead of stdout");

  int exit_code = 0;

  // ---- seq ----------------------------------------------------------------
  auto* seq = app.add_subcommand("seq", "print U_n(k) over an inclusive index range");
  std::string seq_from, seq_to, seq_mod;
  seq->add_option("n_from", seq_from, "first index")->required();
  seq->add_option("n_to", seq_to, "last index")->required();
  seq->add_option("-m,--mod", seq_mod, "reduce every term modulo m");
  seq->callback([&] {
    std::uint64_t n_from = parse_u64(seq_from, "seq n_from");
    std::uint64_t n_to = parse_u64(seq_to, "seq n_to");
    if (n_from > n_to) throw std::invalid_argument("seq: n_from must be <= n_to");
    disclab::LucasParams params(parse_big(g.k, "--k"));
    Document doc;
    doc.config = base_config("seq", g);
    doc.config["n_from"] = n_from;
    doc.config["n_to"] = n_to;
    doc.columns = {"n", "value"};
    if (seq_mod.empty()) {
      if (n_to > 5'000'000) throw disclab::capacity_error("seq: n_to too large without -m");
      Int a = 0, b = 1, t;
      for (std::uint64_t i = 0; i <= n_to; ++i) {
        if (i >= n_from) doc.rows.push_back({{"n", i}, {"value", int_json(a)}});
        t = params.coefficient() * b - a;
        a = std::move(b);
        b = std::move(t);
      }
    } else {
      Int m = parse_big(seq_mod, "seq -m");
      if (m < 1) throw std::invalid_argument("seq: m must be >= 1");
      if (n_to > 100'000'000) throw disclab::capacity_error("seq: n_to too large");
      doc.config["m"] = int_json(m);
      Int c = params.coefficient() % m;
      Int a = 0, b = m > 1 ? 1 : 0, t;
      for (std::uint64_t i = 0; i <= n_to; ++i) {
        if (i >= n_from) doc.rows.push_back({{"n", i}, {"value", int_json(a)}});
        t = (c * b - a) % m;
        if (t < 0) t += m;
        a = std::move(b);
        b = std::move(t);
      }
    }
    emit(doc, g);
  });

  // ---- disc ---------------------------------------------------------------
  auto* disc = app.add_subcommand("disc", "discriminator D_k(n): least m separating U_0..U_{n-1}");
  std::string disc_n, disc_range, disc_meth = "auto";
  disc->add_option("-n", disc_n, "single index n >= 1");
  disc->add_option("--range", disc_range, "inclusive index range A..B");
  disc->add_option("--method", disc_meth, "brute | closed | auto")
      ->check(CLI::IsMember({"brute", "closed", "auto"}))
      ->capture_default_str();
  disc->callback([&] {
    if (disc_n.empty() == disc_range.empty())
      throw std::invalid_argument("disc: exactly one of -n or --range is required");
    std::uint64_t n_from, n_to;
    if (!disc_n.empty()) n_from = n_to = parse_u64(disc_n, "disc -n");
    else std::tie(n_from, n_to) = parse_range(disc_range, "disc --range");
    disclab::LucasParams params(parse_big(g.k, "--k"));
    Document doc;
    doc.config = base_config("disc", g);
    doc.config["n_from"] = n_from;
    doc.config["n_to"] = n_to;
    doc.config["method"] = disc_meth;
    doc.columns = disc_columns;
    if (disc_meth == "brute") {
      for (auto& r : disclab::disc_brute_range(params, n_from, n_to, g.threads))
        doc.rows.push_back(disc_row(r));
    } else {
      for (std::uint64_t n = n_from; n <= n_to; ++n) {
        disclab::DiscriminatorRecord r =
            disc_meth == "auto"        ? disclab::disc_auto(params, n)
            : params.k() == 1          ? disclab::disc_closed_k1(n)
            : params.k() == 2          ? disclab::disc_closed_k2(n)
                                       : disclab::disc_closed_general(params, n).first;
        doc.rows.push_back(disc_row(r));
      }
    }
    emit(doc, g);
  });

  // ---- z ------------------------------------------------------------------
  auto* zc = app.add_subcommand("z", "index of appearance z(m): least i >= 1 with m | U_i");
  std::string z_m, z_range;
  bool z_brute_flag = false;
  zc->add_option("-m", z_m, "single modulus");
  zc->add_option("--range", z_range, "inclusive modulus range A..B");
  zc->add_flag("--brute", z_brute_flag, "add a brute-force oracle column and match flag");
  zc->callback([&] {
    if (z_m.empty() == z_range.empty())
      throw std::invalid_argument("z: exactly one of -m or --range is required");
    std::vector<Int> moduli;
    if (!z_m.empty()) {
      moduli.push_back(parse_big(z_m, "z -m"));
    } else {
      auto [a, b] = parse_range(z_range, "z --range");
      for (std::uint64_t m = a; m <= b; ++m) moduli.push_back(disclab::u64_to_int(m));
    }
    disclab::LucasParams params(parse_big(g.k, "--k"));
    Document doc;
    doc.config = base_config("z", g);
    if (!z_m.empty()) doc.config["m"] = int_json(moduli[0]);
    else doc.config["range"] = z_range;
    doc.config["brute"] = z_brute_flag;
    doc.columns = {"k", "m", "z", "method", "factors_certified", "breakdown"};
    if (z_brute_flag) {
      doc.columns.push_back("z_brute");
      doc.columns.push_back("match");
    }
    for (const Int& m : moduli) {
      disclab::AppearanceResult res = disclab::z_of(params, m, g.factor_bound);
      json row;
      row["k"] = int_json(params.k());
      row["m"] = int_json(res.m);
      row["z"] = int_json(res.z);
      row["method"] = "formula";
      row["factors_certified"] = res.factors_certified;
      json bd = json::array();
      for (const auto& lift : res.breakdown) {
        json e;
        e["p"] = int_json(lift.p);
        e["b"] = lift.b;
        e["z_pb"] = int_json(lift.z_pb);
        e["c"] = lift.c ? json(*lift.c) : json();
        bd.push_back(e);
      }
      row["breakdown"] = bd;
      if (z_brute_flag) {
        Int zb = disclab::z_brute(params, m);
        row["z_brute"] = int_json(zb);
        row["match"] = zb == res.z;
        if (zb != res.z)
          throw disclab::inconsistency_error("z: formula " + res.z.get_str() +
                                             " != brute " + zb.get_str() +
                                             " at m = " + m.get_str());
      }
      doc.rows.push_back(row);
    }
    emit(doc, g);
  });

  // ---- sets ---------------------------------------------------------------
  auto* sets = app.add_subcommand("sets", "members of A_k (odd) and B_k (even) up to a limit");
  std::uint64_t sets_limit = 100;
  sets->add_option("--limit", sets_limit, "largest m tested")->capture_default_str();
  sets->callback([&] {
    if (sets_limit < 1) throw std::invalid_argument("sets: --limit must be >= 1");
    disclab::LucasParams params(parse_big(g.k, "--k"));
    Document doc;
    doc.config = base_config("sets", g);
    doc.config["limit"] = sets_limit;
    doc.columns = {"m", "set"};
    std::string a_line, b_line;
    for (std::uint64_t m = 1; m <= sets_limit; ++m) {
      Int mm = disclab::u64_to_int(m);
      if (disclab::in_set_A(params, mm)) {
        doc.rows.push_back({{"m", m}, {"set", "A"}});
        a_line += (a_line.empty() ? "" : ",") + std::to_string(m);
      } else if (disclab::in_set_B(params, mm)) {
        doc.rows.push_back({{"m", m}, {"set", "B"}});
        b_line += (b_line.empty() ? "" : ",") + std::to_string(m);
      }
    }
    doc.text_body = "A: {" + a_line + "}\nB: {" + b_line + "}\n";
    emit(doc, g);
  });

  // ---- mset ---------------------------------------------------------------
  auto* mset = app.add_subcommand("mset", "members b <= count of the fractional-part set M");
  std::uint64_t mset_count = 0;
  mset->add_option("--count", mset_count, "largest b tested")->required();
  mset->callback([&] {
    if (mset_count < 1) throw std::invalid_argument("mset: --count must be >= 1");
    disclab::MSetParams mp(g.precision_bits);
    Document doc;
    doc.config = base_config("mset", g, /*with_k=*/false);
    doc.config["count"] = mset_count;
    doc.columns = {"b"};
    std::string line;
    std::uint64_t members = 0;
    for (std::uint64_t b = 1; b <= mset_count; ++b) {
      if (disclab::m_set_member(disclab::u64_to_int(b), mp)) {
        doc.rows.push_back({{"b", b}});
        line += (line.empty() ? "" : ",") + std::to_string(b);
        ++members;
      }
    }
    doc.text_body = "members: {" + line + "}\n";
    std::ostringstream density;
    density << "density " << members << "/" << mset_count;
    doc.diagnostics.push_back(density.str());
    emit(doc, g);
  });

  // ---- fk -----------------------------------------------------------------
  auto* fk = app.add_subcommand("fk", "exceptional discriminator values F_k for n <= nmax (k > 1)");
  std::uint64_t fk_nmax = 0;
  fk->add_option("--nmax", fk_nmax, "largest index scanned")->required();
  fk->callback([&] {
    disclab::LucasParams params(parse_big(g.k, "--k"));
    Document doc;
    doc.config = base_config("fk", g);
    doc.config["nmax"] = fk_nmax;
    doc.columns = disc_columns;
    for (auto& r : disclab::fk_extract(params, fk_nmax, g.threads)) doc.rows.push_back(disc_row(r));
    if (doc.rows.empty()) doc.diagnostics.push_back("F_k empty for n <= " + std::to_string(fk_nmax));
    emit(doc, g);
  });

  // ---- sunit --------------------------------------------------------------
  auto* su = app.add_subcommand("sunit", "S-unit enumeration and gap certificates");
  su->require_subcommand(1);

  auto* su_next = su->add_subcommand("next", "least admissible S-unit >= x");
  std::string su_primes = "2,5", su_min, su_x;
  bool su_even = false, su_nonine = false;
  su_next->add_option("--primes", su_primes, "comma-separated primes, ascending")
      ->capture_default_str();
  su_next->add_option("--min", su_min, "comma-separated minimum exponents (default all 0)");
  su_next->add_flag("--even", su_even, "restrict to even values");
  su_next->add_flag("--no-nine", su_nonine, "discard multiples of 9");
  su_next->add_option("-x", su_x, "lower bound")->required();
  su_next->callback([&] {
    std::vector<Int> primes;
    for (const std::string& s : split_commas(su_primes)) primes.push_back(parse_big(s, "sunit --primes"));
    std::vector<unsigned long> mins;
    for (const std::string& s : split_commas(su_min))
      mins.push_back(parse_u64(s, "sunit --min"));
    disclab::SUnitSpec spec(primes, mins, su_even, su_nonine);
    Int x = parse_big(su_x, "sunit -x");
    if (x < 1) throw std::invalid_argument("sunit next: x must be >= 1");
    Document doc;
    doc.config = base_config("sunit next", g, /*with_k=*/false);
    doc.config["primes"] = su_primes;
    doc.config["min"] = su_min;
    doc.config["even"] = su_even;
    doc.config["no_nine"] = su_nonine;
    doc.config["x"] = int_json(x);
    doc.columns = {"value"};
    doc.rows.push_back({{"value", int_json(disclab::sunit_next(spec, x))}});
    emit(doc, g);
  });

  auto* su_gap25 = su->add_subcommand("gap25", "least 2^a 5^b (a,b >= 1) >= ceil(5n/3); found iff < 37n/19");
  std::string su_g25_n;
  su_gap25->add_option("-n", su_g25_n, "index n >= 1")->required();
  su_gap25->callback([&] {
    Int n = parse_big(su_g25_n, "sunit gap25 -n");
    disclab::GapCheck25 res = disclab::gap_check_25(n);
    Document doc;
    doc.config = base_config("sunit gap25", g, /*with_k=*/false);
    doc.config["n"] = int_json(n);
    doc.columns = {"n", "found", "witness"};
    doc.rows.push_back({{"n", int_json(n)},
                        {"found", res.found},
                        {"witness", res.found ? int_json(res.witness) : json()}});
    emit(doc, g);
  });

  auto* su_gapgen = su->add_subcommand(
      "gapgen", "indices n in [from,to] whose window [n*ratio, 2n) misses every {2,p}-unit");
  std::string su_gg_p, su_gg_ratio, su_gg_from = "1", su_gg_to = "10000";
  su_gapgen->add_option("-p", su_gg_p, "odd prime p")->required();
  su_gapgen->add_option("--ratio", su_gg_ratio, "rational num/den > 1")->required();
  su_gapgen->add_option("--from", su_gg_from, "first index")->capture_default_str();
  su_gapgen->add_option("--to", su_gg_to, "last index")->capture_default_str();
  su_gapgen->callback([&] {
    Int p = parse_big(su_gg_p, "sunit gapgen -p");
    auto slash = su_gg_ratio.find('/');
    Int num = parse_big(su_gg_ratio.substr(0, slash), "sunit gapgen --ratio");
    Int den = slash == std::string::npos
                  ? Int(1)
                  : parse_big(su_gg_ratio.substr(slash + 1), "sunit gapgen --ratio");
    std::uint64_t n_from = parse_u64(su_gg_from, "sunit gapgen --from");
    std::uint64_t n_to = parse_u64(su_gg_to, "sunit gapgen --to");
    Document doc;
    doc.config = base_config("sunit gapgen", g, /*with_k=*/false);
    doc.config["p"] = int_json(p);
    doc.config["ratio"] = su_gg_ratio;
    doc.config["n_from"] = n_from;
    doc.config["n_to"] = n_to;
    doc.columns = {"n"};
    for (std::uint64_t n : disclab::gap_check_general(p, num, den, n_from, n_to, g.threads))
      doc.rows.push_back({{"n", n}});
    if (doc.rows.empty())
      doc.diagnostics.push_back("no gap failures in [" + std::to_string(n_from) + ", " +
                                std::to_string(n_to) + "]");
    emit(doc, g);
  });

  auto* su_e37 = su->add_subcommand("e37", "exponents e with 38*37^(i-1) <= 2^e < 74*37^(i-1)");
  su_e37->callback([&] {
    Document doc;
    doc.config = base_config("sunit e37", g, /*with_k=*/false);
    doc.columns = {"i", "e"};
    for (auto [i, e] : disclab::thirty_seven_exponents())
      doc.rows.push_back({{"i", i}, {"e", e}});
    emit(doc, g);
  });

  auto* su_levi = su->add_subcommand("levi", "k <= kmax with k(k+1) = 2^a 3^b");
  std::uint64_t su_lv_kmax = 0;
  su_levi->add_option("--kmax", su_lv_kmax, "largest k tested")->required();
  su_levi->callback([&] {
    Document doc;
    doc.config = base_config("sunit levi", g, /*with_k=*/false);
    doc.config["kmax"] = su_lv_kmax;
    doc.columns = {"k", "a", "b"};
    for (const auto& s : disclab::levi_ben_gerson(su_lv_kmax))
      doc.rows.push_back({{"k", int_json(s.k)}, {"a", s.a}, {"b", s.b}});
    emit(doc, g);
  });

  // ---- verify ---------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  std::string ver_suite = "all";
  ver->add_option("--suite", ver_suite, "criterion name or 'all'")->capture_default_str();
  ver->callback([&] {
    std::vector<disclab::CriterionResult> results = disclab::run_suite(ver_suite, g.threads);
    Document doc;
    doc.config = base_config("verify", g, /*with_k=*/false);
    doc.config["suite"] = ver_suite;
    doc.columns = {"name", "passed", "detail"};
    std::string body;
    bool all_ok = true;
    for (const auto& r : results) {
      doc.rows.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      body += (r.passed ? "PASS  " : "FAIL  ") + r.name;
      if (!r.detail.empty()) body += "  " + r.detail;
      body += '\n';
      std::cerr << "# " << r.name << ": " << r.seconds << "s\n";
      all_ok = all_ok && r.passed;
    }
    body += all_ok ? "all criteria passed\n" : "FAILURES PRESENT\n";
    doc.text_body = body;
    emit(doc, g);
    if (!all_ok) exit_code = 3;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const disclab::inconsistency_error& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return 3;
  } catch (const disclab::capacity_error& e) {
    std::cerr << "capacity: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return exit_code;
}
