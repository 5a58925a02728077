#include "l2sig/io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "l2sig/errors.hpp"

namespace l2sig {

using nlohmann::json;

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
  throw ParseError(path + ": " + what, 0, 0);
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

std::int64_t as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

Rational as_rational(const json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const DomainError& e) {
    schema_error(path, e.what());
  }
}

const json& member(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object()) schema_error(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(path, std::string("missing key '") + key + "'");
  return *it;
}

struct GroupSpec {
  bool integers = false;
  FiniteAbelianGroup finite;
};

GroupSpec read_group(const json& j) {
  const json& kind = member(j, "kind", "group");
  if (!kind.is_string()) schema_error("group.kind", "expected a string");
  const auto k = kind.get<std::string>();
  if (k == "Z") return {true, {}};
  if (k == "trivial") return {false, FiniteAbelianGroup()};
  if (k == "cyclic") {
    const auto n = as_int(member(j, "order", "group"), "group.order");
    if (n < 1) throw DomainError("cyclic group order must be positive");
    return {false, FiniteAbelianGroup::cyclic(n)};
  }
  if (k == "abelian") {
    const json& f = member(j, "factors", "group");
    if (!f.is_array()) schema_error("group.factors", "expected an array");
    std::vector<std::int64_t> factors;
    for (std::size_t i = 0; i < f.size(); ++i) factors.push_back(as_int(f[i], "group.factors[" + std::to_string(i) + "]"));
    return {false, FiniteAbelianGroup(std::move(factors))};
  }
  schema_error("group.kind", "unknown kind '" + k + "'");
}

std::string entry_path(std::size_t i, std::size_t j) {
  return "matrix[" + std::to_string(i) + "][" + std::to_string(j) + "]";
}

}  // namespace

json group_to_json(const FiniteAbelianGroup& group) {
  if (group.is_trivial()) return {{"kind", "trivial"}};
  if (group.rank() == 1) return {{"kind", "cyclic"}, {"order", group.factors()[0]}};
  return {{"kind", "abelian"}, {"factors", group.factors()}};
}

FormDocument parse_form(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte);
    throw ParseError("malformed form document", line, col);
  }
  const GroupSpec group = read_group(member(doc, "group", "document"));
  const auto dim = as_int(member(doc, "dim", "document"), "dim");
  if (dim < 0) schema_error("dim", "must be nonnegative");
  const json& rows = member(doc, "matrix", "document");
  const auto n = static_cast<std::size_t>(dim);
  if (!rows.is_array() || rows.size() != n) schema_error("matrix", "expected " + std::to_string(n) + " rows");
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n) {
      schema_error("matrix[" + std::to_string(i) + "]", "expected " + std::to_string(n) + " entries");
    }
  }

  auto for_each_term = [&](std::size_t i, std::size_t j, auto&& fn) {
    const json& entry = rows[i][j];
    const auto path = entry_path(i, j);
    if (!entry.is_array()) schema_error(path, "expected a list of [element, coefficient] pairs");
    for (std::size_t t = 0; t < entry.size(); ++t) {
      const auto tpath = path + "[" + std::to_string(t) + "]";
      if (!entry[t].is_array() || entry[t].size() != 2) schema_error(tpath, "expected [element, coefficient]");
      fn(entry[t][0], as_rational(entry[t][1], tpath + "[1]"), tpath + "[0]");
    }
  };

  const auto ei = static_cast<Eigen::Index>(n);
  if (group.integers) {
    LaurentHermitianForm form{DenseMatrix<LaurentPolynomial>(ei, ei)};
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for_each_term(i, j, [&](const json& el, const Rational& q, const std::string& p) {
          form.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).add_term(static_cast<long>(as_int(el, p)), q);
        });
      }
    }
    if (auto bad = validate_hermitian(form)) throw ValidationError(bad->first, bad->second);
    return form;
  }

  HermitianGroupForm form{group.finite, DenseMatrix<GroupRingElement>(ei, ei)};
  const auto& g = form.group;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for_each_term(i, j, [&](const json& el, const Rational& q, const std::string& p) {
        if (!el.is_array() || el.size() != g.rank()) schema_error(p, "expected " + std::to_string(g.rank()) + " residues");
        GroupElement e;
        for (std::size_t r = 0; r < el.size(); ++r) e.residues.push_back(as_int(el[r], p));
        if (!g.contains(e)) schema_error(p, "residue out of range");
        form.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)).add_term(e, q);
      });
    }
  }
  if (auto bad = validate_hermitian(form)) throw ValidationError(bad->first, bad->second);
  return form;
}

json form_to_json(const FormDocument& doc) {
  json out;
  json rows = json::array();
  std::visit(
      [&](const auto& form) {
        using T = std::decay_t<decltype(form)>;
        const auto& m = form.matrix;
        out["dim"] = m.rows();
        if constexpr (std::is_same_v<T, LaurentHermitianForm>) {
          out["group"] = {{"kind", "Z"}};
        } else {
          out["group"] = group_to_json(form.group);
        }
        for (Eigen::Index i = 0; i < m.rows(); ++i) {
          json row = json::array();
          for (Eigen::Index j = 0; j < m.cols(); ++j) {
            json entry = json::array();
            for (auto& [el, q] : m(i, j).terms()) {
              if constexpr (std::is_same_v<T, LaurentHermitianForm>) {
                entry.push_back(json::array({el, to_string(q)}));
              } else {
                entry.push_back(json::array({el.residues, to_string(q)}));
              }
            }
            row.push_back(std::move(entry));
          }
          rows.push_back(std::move(row));
        }
      },
      doc);
  out["matrix"] = std::move(rows);
  return out;
}

std::string serialize_form(const FormDocument& doc) {
  const json j = form_to_json(doc);
  std::ostringstream os;
  os << "{\n";
  os << "  \"dim\": " << j["dim"].dump() << ",\n";
  os << "  \"group\": " << j["group"].dump() << ",\n";
  const auto& rows = j["matrix"];
  if (rows.empty()) {
    os << "  \"matrix\": []\n";
  } else {
    os << "  \"matrix\": [\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      os << "    " << rows[i].dump() << (i + 1 < rows.size() ? ",\n" : "\n");
    }
    os << "  ]\n";
  }
  os << "}\n";
  return os.str();
}

FiniteAbelianGroup parse_group_spec(std::string_view spec) {
  if (spec == "trivial") return FiniteAbelianGroup();
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) throw DomainError("group spec must be trivial, cyclic:N or abelian:d1,d2,...");
  const auto kind = spec.substr(0, colon);
  std::vector<std::int64_t> values;
  std::string_view rest = spec.substr(colon + 1);
  while (!rest.empty()) {
    const auto comma = rest.find(',');
    const std::string item(rest.substr(0, comma));
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](unsigned char c) { return std::isdigit(c); })) {
      throw DomainError("malformed group spec '" + std::string(spec) + "'");
    }
    values.push_back(std::stoll(item));
    rest = comma == std::string_view::npos ? std::string_view() : rest.substr(comma + 1);
  }
  if (kind == "cyclic" && values.size() == 1) {
    if (values[0] < 1) throw DomainError("cyclic group order must be positive");
    return FiniteAbelianGroup::cyclic(values[0]);
  }
  if (kind == "abelian") return FiniteAbelianGroup(std::move(values));
  throw DomainError("malformed group spec '" + std::string(spec) + "'");
}

Rational parse_exact_number(std::string_view text) {
  if (text.find('/') != std::string_view::npos) return parse_rational(text);
  std::string s(text);
  std::int64_t exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    const std::string ex = s.substr(e + 1);
    try {
      std::size_t used = 0;
      exp10 = std::stoll(ex, &used);
      if (used != ex.size()) throw std::invalid_argument(ex);
    } catch (const std::exception&) {
      throw DomainError("malformed number '" + std::string(text) + "'");
    }
    s.resize(e);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    exp10 -= static_cast<std::int64_t>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  Rational q = parse_rational(s);
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 < 0) q /= p;
  else q *= p;
  return q;
}

}  // namespace l2sig
