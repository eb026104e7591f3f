#include "dilp/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace dilp {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  fail(ErrorKind::Parse, where + ": " + what);
}

Int read_int(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Int(std::to_string(j.get<uint64_t>())) : Int(std::to_string(j.get<int64_t>()));
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    size_t k = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (k == s.size()) bad(where, "empty integer string");
    for (size_t i = k; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') bad(where, "not an integer: \"" + s + "\"");
    return Int(s[0] == '+' ? s.substr(1) : s);
  }
  bad(where, "expected an integer");
}

ExtInt read_ext(const json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return ExtInt::neg_inf();
    if (s == "+inf") return ExtInt::pos_inf();
  }
  return ExtInt(read_int(j, where));
}

IntVec read_vec(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  IntVec v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(read_int(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

ExtVec read_ext_vec(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array");
  ExtVec v;
  for (size_t i = 0; i < j.size(); ++i) v.push_back(read_ext(j[i], where + "[" + std::to_string(i) + "]"));
  return v;
}

// cols is the expected width; zero-row matrices are written as []
IntMat read_mat(const json& j, int cols, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of rows");
  std::vector<IntVec> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    rows.push_back(read_vec(j[i], where + "[" + std::to_string(i) + "]"));
    if (static_cast<int>(rows.back().size()) != cols)
      bad(where, "row " + std::to_string(i) + " has " + std::to_string(rows.back().size()) + " entries, expected " +
                     std::to_string(cols));
  }
  return IntMat::from_rows(rows, cols);
}

json write_int(const Int& v) {
  if (fits_i64(v)) return json(to_i64(v));
  return json(v.get_str());
}
json write_ext(const ExtInt& e) {
  if (e.is_neg_inf()) return json("-inf");
  if (e.is_pos_inf()) return json("+inf");
  return write_int(e.value());
}
json write_vec(const IntVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(write_int(x));
  return a;
}
json write_ext_vec(const ExtVec& v) {
  json a = json::array();
  for (auto& x : v) a.push_back(write_ext(x));
  return a;
}
json write_mat(const IntMat& M) {
  json a = json::array();
  for (int i = 0; i < M.rows(); ++i) a.push_back(write_vec(M.row(i)));
  return a;
}

void check_keys(const json& j, const std::set<std::string>& allowed, const std::set<std::string>& required) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key())) bad("instance", "unknown key \"" + it.key() + "\"");
  for (auto& k : required)
    if (!j.contains(k)) bad("instance", "missing key \"" + k + "\"");
}

void expect_len(size_t got, size_t want, const std::string& where) {
  if (got != want) bad(where, "length " + std::to_string(got) + ", expected " + std::to_string(want));
}

}  // namespace

InstanceForm parse_form(const std::string& s) {
  if (s == "ilp-cf") return InstanceForm::IlpCf;
  if (s == "bilp-cf") return InstanceForm::BilpCf;
  if (s == "ilp-sf") return InstanceForm::IlpSf;
  if (s == "bilp-sf") return InstanceForm::BilpSf;
  if (s == "group") return InstanceForm::Group;
  fail(ErrorKind::Parse, "unknown form \"" + s + "\"");
}

const char* to_string(InstanceForm f) {
  switch (f) {
    case InstanceForm::IlpCf: return "ilp-cf";
    case InstanceForm::BilpCf: return "bilp-cf";
    case InstanceForm::IlpSf: return "ilp-sf";
    case InstanceForm::BilpSf: return "bilp-sf";
    case InstanceForm::Group: return "group";
  }
  return "?";
}

int InstanceFile::n() const {
  if (canonical()) return cf.n();
  if (standard()) return sf.n();
  return group.n();
}

InstanceFile wrap(const CanonicalInstance& I) {
  InstanceFile f;
  f.cf = I;
  long fin = 0;
  for (auto& v : I.b_l) fin += v.finite();
  if (fin != 0 && fin != static_cast<long>(I.b_l.size())) fail(ErrorKind::Parse, "b_l mixes finite and -inf entries");
  f.form = fin == 0 ? InstanceForm::IlpCf : InstanceForm::BilpCf;
  return f;
}

InstanceFile wrap(const StandardInstance& I) {
  InstanceFile f;
  f.sf = I;
  if (I.bounded()) f.form = InstanceForm::BilpSf;
  else if (I.unbounded()) f.form = InstanceForm::IlpSf;
  else fail(ErrorKind::Parse, "u mixes finite and +inf entries");
  return f;
}

InstanceFile wrap(const GroupInstance& I) {
  InstanceFile f;
  f.form = InstanceForm::Group;
  f.group = I;
  return f;
}

namespace {

InstanceFile parse_impl(const std::string& text, bool check) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorKind::Parse, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) bad("instance", "top level must be a map");
  if (!j.contains("form") || !j["form"].is_string()) bad("instance", "missing string key \"form\"");
  InstanceFile f;
  f.form = parse_form(j["form"].get<std::string>());
  if (j.contains("comment")) {
    if (!j["comment"].is_string()) bad("comment", "expected a string");
    f.comment = j["comment"].get<std::string>();
  }
  if (j.contains("report")) {
    const json& r = j["report"];
    if (!r.is_array()) bad("report", "expected an array");
    for (auto& e : r) {
      if (!e.is_object()) bad("report", "entries must be maps");
      check_keys(e, {"name", "inputs", "lhs", "rhs", "pass"}, {"name", "rhs", "pass"});
      BoundEntry b;
      b.name = e["name"].get<std::string>();
      if (e.contains("inputs")) b.inputs = e["inputs"].get<std::string>();
      if (e.contains("lhs")) b.lhs = e["lhs"].get<std::string>();
      b.rhs = e["rhs"].get<std::string>();
      b.pass = e["pass"].get<bool>();
      b.violations = b.pass ? 0 : 1;
      f.report.push_back(b);
    }
  }

  switch (f.form) {
    case InstanceForm::IlpCf:
    case InstanceForm::BilpCf: {
      const bool bilp = f.form == InstanceForm::BilpCf;
      check_keys(j, {"form", "comment", "report", "A", "b_l", "b_r", "c"},
                 bilp ? std::set<std::string>{"A", "b_l", "b_r", "c"} : std::set<std::string>{"A", "b_r", "c"});
      auto& I = f.cf;
      I.c = read_vec(j["c"], "c");
      const int n = static_cast<int>(I.c.size());
      I.A = read_mat(j["A"], n, "A");
      I.b_r = read_vec(j["b_r"], "b_r");
      expect_len(I.b_r.size(), I.A.rows(), "b_r");
      if (j.contains("b_l")) {
        I.b_l = read_ext_vec(j["b_l"], "b_l");
        expect_len(I.b_l.size(), I.A.rows(), "b_l");
      } else {
        I.b_l.assign(I.A.rows(), ExtInt::neg_inf());
      }
      for (size_t i = 0; i < I.b_l.size(); ++i) {
        if (I.b_l[i].is_pos_inf()) bad("b_l", "+inf lower bound");
        if (bilp != I.b_l[i].finite())
          bad("b_l[" + std::to_string(i) + "]", bilp ? "bilp-cf needs finite lower bounds" : "ilp-cf needs -inf");
      }
      if (check) require_valid(I);
      break;
    }
    case InstanceForm::IlpSf:
    case InstanceForm::BilpSf: {
      const bool bilp = f.form == InstanceForm::BilpSf;
      check_keys(j, {"form", "comment", "report", "A", "G", "S", "b", "g", "u", "c"},
                 bilp ? std::set<std::string>{"A", "G", "S", "b", "g", "u", "c"}
                      : std::set<std::string>{"A", "G", "S", "b", "g", "c"});
      auto& I = f.sf;
      I.c = read_vec(j["c"], "c");
      const int n = static_cast<int>(I.c.size());
      I.A = read_mat(j["A"], n, "A");
      I.G = read_mat(j["G"], n, "G");
      I.S = read_mat(j["S"], I.G.rows(), "S");
      expect_len(I.S.rows(), I.G.rows(), "S");
      I.b = read_vec(j["b"], "b");
      expect_len(I.b.size(), I.A.rows(), "b");
      I.g = read_vec(j["g"], "g");
      expect_len(I.g.size(), I.G.rows(), "g");
      if (j.contains("u")) {
        I.u = read_ext_vec(j["u"], "u");
        expect_len(I.u.size(), n, "u");
      } else {
        I.u.assign(n, ExtInt::pos_inf());
      }
      for (size_t i = 0; i < I.u.size(); ++i) {
        if (I.u[i].is_neg_inf()) bad("u", "-inf upper bound");
        if (bilp != I.u[i].finite())
          bad("u[" + std::to_string(i) + "]", bilp ? "bilp-sf needs finite upper bounds" : "ilp-sf needs +inf");
      }
      if (check) require_valid(I);
      break;
    }
    case InstanceForm::Group: {
      check_keys(j, {"form", "comment", "report", "moduli", "gens", "target", "c", "u"},
                 {"moduli", "gens", "target", "c"});
      auto& I = f.group;
      I.group.moduli = read_vec(j["moduli"], "moduli");
      const int k = static_cast<int>(I.group.moduli.size());
      IntMat gens = read_mat(j["gens"], k, "gens");
      for (int i = 0; i < gens.rows(); ++i) I.gens.push_back(gens.row(i));
      I.target = read_vec(j["target"], "target");
      expect_len(I.target.size(), k, "target");
      I.c = read_vec(j["c"], "c");
      expect_len(I.c.size(), I.gens.size(), "c");
      if (j.contains("u")) {
        I.u = read_ext_vec(j["u"], "u");
        expect_len(I.u.size(), I.gens.size(), "u");
        for (auto& v : I.u)
          if (v.is_neg_inf()) bad("u", "-inf upper bound");
      }
      if (check) require_valid(I);
      break;
    }
  }
  return f;
}

}  // namespace

InstanceFile parse_instance(const std::string& text, bool check) {
  try {
    return parse_impl(text, check);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorKind::Parse, std::string("bad value: ") + e.what());
  }
}

InstanceFile read_instance(const std::string& path, bool check) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_instance(ss.str(), check);
}

std::string write_instance(const InstanceFile& f) {
  json j;
  j["form"] = to_string(f.form);
  if (!f.comment.empty()) j["comment"] = f.comment;
  if (f.canonical()) {
    j["A"] = write_mat(f.cf.A);
    if (f.form == InstanceForm::BilpCf) j["b_l"] = write_ext_vec(f.cf.b_l);
    j["b_r"] = write_vec(f.cf.b_r);
    j["c"] = write_vec(f.cf.c);
  } else if (f.standard()) {
    j["A"] = write_mat(f.sf.A);
    j["G"] = write_mat(f.sf.G);
    j["S"] = write_mat(f.sf.S);
    j["b"] = write_vec(f.sf.b);
    j["g"] = write_vec(f.sf.g);
    j["u"] = write_ext_vec(f.sf.u);
    j["c"] = write_vec(f.sf.c);
  } else {
    j["moduli"] = write_vec(f.group.group.moduli);
    json g = json::array();
    for (auto& e : f.group.gens) g.push_back(write_vec(e));
    j["gens"] = g;
    j["target"] = write_vec(f.group.target);
    j["c"] = write_vec(f.group.c);
    if (!f.group.u.empty()) j["u"] = write_ext_vec(f.group.u);
  }
  if (!f.report.empty()) {
    json r = json::array();
    for (auto& e : f.report) {
      json x;
      x["name"] = e.name;
      if (!e.inputs.empty()) x["inputs"] = e.inputs;
      if (!e.lhs.empty()) x["lhs"] = e.lhs;
      x["rhs"] = e.rhs;
      x["pass"] = e.pass;
      r.push_back(x);
    }
    j["report"] = r;
  }
  // rows of a matrix on one line each
  std::string out = "{\n";
  bool first = true;
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!first) out += ",\n";
    first = false;
    out += "  " + json(it.key()).dump() + ": ";
    const json& v = it.value();
    if (v.is_array() && !v.empty() && (v[0].is_array() || v[0].is_object())) {
      out += "[\n";
      for (size_t i = 0; i < v.size(); ++i) out += "    " + v[i].dump() + (i + 1 < v.size() ? ",\n" : "\n");
      out += "  ]";
    } else {
      out += v.dump();
    }
  }
  out += "\n}\n";
  return out;
}

}  // namespace dilp
