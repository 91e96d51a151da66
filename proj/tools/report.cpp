#include "report.hpp"

#include <sstream>
#include <stdexcept>

#include "opbianchi/expression.hpp"

namespace opbianchi::report {
namespace {

std::optional<std::string> a_text(const BianchiType& t) {
  if (auto a = t.a_if_any()) return to_string(*a);
  return std::nullopt;
}

template <class C, class F>
TableRow row_from(const BianchiType& t, const StructureTensor<C>& mu, F&& fmt) {
  TableRow row{tag_name(t.tag()), a_text(t), {}};
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& e = kIndependentEntries[n];
    row.values[n] = fmt(mu(e[0], e[1], e[2]));
  }
  return row;
}

template <class C, class F>
StructureTensor<C> tensor_from(const TableRow& row, F&& parse) {
  StructureTensor<C> mu;
  for (std::size_t n = 0; n < 9; ++n) {
    const auto& e = kIndependentEntries[n];
    mu.set_antisymmetric(e[0], e[1], e[2], parse(row.values[n]));
  }
  return mu;
}

std::string label(std::size_t n) {
  const auto& e = kIndependentEntries[n];
  return entry_label(e[0], e[1], e[2]);
}

const nlohmann::ordered_json& require(const nlohmann::ordered_json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("table JSON lacks field \"") + key + "\"");
  }
  return j.at(key);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  if (name == "text") return Format::Text;
  throw std::invalid_argument("unknown format '" + name + "' (expected json, csv or text)");
}

TableRow make_row(const BianchiType& t, const StructureTensor<Rational>& mu) {
  return row_from(t, mu, [](const Rational& r) { return format(CPoly(r)); });
}
TableRow make_row(const BianchiType& t, const PolyStructureTensor& mu) {
  return row_from(t, mu, [](const CPoly& f) { return format(f); });
}
TableRow make_row(const BianchiType& t, const QuantumStructureTensor& mu) {
  return row_from(t, mu, [](const NCPoly& f) { return format(f); });
}

nlohmann::ordered_json to_json(const TableDocument& doc) {
  nlohmann::ordered_json out;
  out["table"] = doc.table;
  if (doc.omega) out["omega"] = to_string(*doc.omega);
  if (doc.p0) out["p0"] = to_string(*doc.p0);
  out["rows"] = nlohmann::ordered_json::array();
  for (const auto& row : doc.rows) {
    nlohmann::ordered_json r;
    r["type"] = row.type;
    r["a"] = row.a ? nlohmann::ordered_json(*row.a) : nlohmann::ordered_json(nullptr);
    r["entries"] = nlohmann::ordered_json::array();
    for (std::size_t n = 0; n < 9; ++n) {
      const auto& e = kIndependentEntries[n];
      r["entries"].push_back({{"i", e[0] + 1}, {"j", e[1] + 1}, {"k", e[2] + 1}, {"value", row.values[n]}});
    }
    out["rows"].push_back(std::move(r));
  }
  return out;
}

TableDocument table_from_json(const nlohmann::ordered_json& j) {
  TableDocument doc;
  doc.table = require(j, "table").get<std::string>();
  if (j.contains("omega")) doc.omega = parse_rational(j.at("omega").get<std::string>());
  if (j.contains("p0")) doc.p0 = parse_rational(j.at("p0").get<std::string>());
  for (const auto& r : require(j, "rows")) {
    TableRow row;
    row.type = require(r, "type").get<std::string>();
    const auto& a = require(r, "a");
    if (!a.is_null()) row.a = a.get<std::string>();
    std::array<bool, 9> seen{};
    for (const auto& e : require(r, "entries")) {
      const std::size_t i = require(e, "i").get<std::size_t>() - 1;
      const std::size_t jj = require(e, "j").get<std::size_t>() - 1;
      const std::size_t k = require(e, "k").get<std::size_t>() - 1;
      bool placed = false;
      for (std::size_t n = 0; n < 9; ++n) {
        const auto& ie = kIndependentEntries[n];
        if (ie[0] == i && ie[1] == jj && ie[2] == k) {
          row.values[n] = require(e, "value").get<std::string>();
          seen[n] = placed = true;
        }
      }
      if (!placed) throw std::invalid_argument("entry index is not an independent structure constant");
    }
    for (bool s : seen) {
      if (!s) throw std::invalid_argument("row " + row.type + " is missing entries");
    }
    doc.rows.push_back(std::move(row));
  }
  return doc;
}

StructureTensor<Rational> rational_tensor(const TableRow& row) {
  return tensor_from<Rational>(row, [](const std::string& v) {
    const CPoly f = parse_cpoly(v, 0);
    if (!f.is_constant() || !f.constant_term().is_rational()) {
      throw std::invalid_argument("constant table entry expected, got '" + v + "'");
    }
    return f.constant_term().rational_part();
  });
}

PolyStructureTensor poly_tensor(const TableRow& row, const Rational& radicand) {
  return tensor_from<CPoly>(row, [&](const std::string& v) { return parse_cpoly(v, radicand); });
}

QuantumStructureTensor quantum_tensor(const TableRow& row, const Rational& radicand) {
  return tensor_from<NCPoly>(row, [&](const std::string& v) { return parse_ncpoly(v, radicand); });
}

std::string render(const TableDocument& doc, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Json:
      out << to_json(doc).dump(2) << '\n';
      break;
    case Format::Csv:
      out << "type,a,i,j,k,value\n";
      for (const auto& row : doc.rows) {
        for (std::size_t n = 0; n < 9; ++n) {
          const auto& e = kIndependentEntries[n];
          out << row.type << ',' << row.a.value_or("") << ',' << e[0] + 1 << ',' << e[1] + 1 << ','
              << e[2] + 1 << ',' << row.values[n] << '\n';
        }
      }
      break;
    case Format::Text:
      out << "table " << doc.table;
      if (doc.omega) out << "  omega = " << to_string(*doc.omega);
      if (doc.p0) out << "  p0 = " << to_string(*doc.p0) << "  (s = sqrt(2 p0))";
      out << '\n';
      for (const auto& row : doc.rows) {
        out << row.type;
        if (row.a) out << "  (a = " << *row.a << ')';
        out << '\n';
        bool any = false;
        for (std::size_t n = 0; n < 9; ++n) {
          if (row.values[n] == "0") continue;
          out << "  " << label(n) << " = " << row.values[n] << '\n';
          any = true;
        }
        if (!any) out << "  all entries zero\n";
      }
      break;
  }
  return out.str();
}

nlohmann::ordered_json to_json(const AnomalyCertificate& cert) {
  auto triple = [](const JacobianTriple& t) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : t.coords) arr.push_back(format(c));
    return arr;
  };
  nlohmann::ordered_json j;
  j["type"] = tag_name(cert.type.tag());
  j["a"] = cert.type.a_if_any() ? nlohmann::ordered_json(to_string(*cert.type.a_if_any()))
                                : nlohmann::ordered_json(nullptr);
  j["kind"] = kind_name(cert.kind);
  j["tau"] = cert.tau ? nlohmann::ordered_json(*cert.tau) : nlohmann::ordered_json(nullptr);
  j["jacobian"] = triple(cert.jacobian);
  j["closed_form"] = cert.closed_form ? triple(*cert.closed_form) : nlohmann::ordered_json(nullptr);
  j["coordinate_matches"] = cert.coordinate_matches;
  j["description"] = cert.description;
  return j;
}

std::string render_text(const AnomalyCertificate& cert) {
  std::ostringstream out;
  out << cert.type.name() << ": " << kind_name(cert.kind);
  if (cert.tau) out << " (tau = " << *cert.tau << ')';
  out << '\n';
  for (std::size_t m = 0; m < 3; ++m) {
    out << "  J" << m + 1 << " = " << format(cert.jacobian.coords[m]);
    if (cert.closed_form) out << (cert.coordinate_matches[m] ? "  [matches]" : "  [differs]");
    out << '\n';
  }
  if (!cert.description.empty()) out << "  " << cert.description << '\n';
  return out.str();
}

}  // namespace opbianchi::report
