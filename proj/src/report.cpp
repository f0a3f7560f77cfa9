// Copyright 2026 The mrsums authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "report.hpp"

#include <json.hpp>

#include <sstream>

namespace mrs {

using nlohmann::json;

namespace {

json rat_json(const Rat& q) { return rat_string(q); }

json enclosure_json(const Enclosure& e) {
  return json{{"lo", rat_json(e.lo)},
              {"hi", rat_json(e.hi)},
              {"lo_decimal", decimal_string(e.lo, kDecimalDigits)},
              {"hi_decimal", decimal_string(e.hi, kDecimalDigits)}};
}

json bound_json(const BoundReport& r) {
  return json{{"claim", r.claim},
              {"lhs", json::array({rat_json(r.lhs.lo), rat_json(r.lhs.hi)})},
              {"rhs", json::array({rat_json(r.rhs.lo), rat_json(r.rhs.hi)})},
              {"verdict", verdict_name(r.verdict)}};
}

json spec_json(const SumSpec& spec) {
  return json{{"f", spec.f.str()},
              {"s", spec.s.str()},
              {"n", spec.n},
              {"k", spec.k()},
              {"mode", mode_name(spec.mode)}};
}

std::string enclosure_text(const Enclosure& e) {
  return "[" + rat_string(e.lo) + ", " + rat_string(e.hi) + "] (~" +
         decimal_string(e.lo, kDecimalDigits) + " .. ~" + decimal_string(e.hi, kDecimalDigits) +
         ")";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

json certificate_json(const Certificate& cert) {
  json j{{"kind", cert_kind_name(cert.kind)},
         {"method", cert.method},
         {"spec", spec_json(cert.spec)}};
  if (cert.kind == CertKind::ValuationNegative) {
    j["prime"] = cert.prime;
    j["valuation"] = cert.valuation;
    // when valuation_exact is false the valuation field is a proven
    // upper bound on v_p, still negative
    j["valuation_exact"] = cert.valuation_exact;
  }
  if (cert.kind == CertKind::StrictlyBetween) {
    j["between"] = json::array({cert.lower_int.get_str(), cert.upper_int.get_str()});
  }
  if (cert.integer_value) j["integer"] = cert.integer_value->get_str();
  if (cert.bound) j["bounds"] = bound_json(*cert.bound);
  if (cert.exact_value) {
    j["value"] = rat_json(*cert.exact_value);
    j["value_decimal"] = decimal_string(*cert.exact_value, kDecimalDigits);
  }
  if (cert.value_enclosure) j["value_enclosure"] = enclosure_json(*cert.value_enclosure);
  j["cross_checked"] = cert.cross_checked;
  return j;
}

}  // namespace

std::string render_compute(const ComputeResult& r, OutputFormat format) {
  std::string value, decimal, integer;
  bool whole = false;
  if (r.exact) {
    value = rat_string(*r.exact);
    decimal = decimal_string(*r.exact, kDecimalDigits);
    if (auto w = as_integer(*r.exact)) {
      whole = true;
      integer = w->get_str();
    }
  }
  switch (format) {
    case OutputFormat::Json: {
      json j{{"f", r.f}, {"s", r.s},       {"n", r.n},
             {"mode", mode_name(r.mode)},  {"backend", r.backend}};
      if (r.exact) {
        j["value"] = value;
        j["decimal"] = decimal;
        j["is_integer"] = whole;
        if (whole) j["integer"] = integer;
      }
      if (r.enclosure) j["enclosure"] = enclosure_json(*r.enclosure);
      if (r.traced) {
        json hits = json::array();
        for (const auto& h : r.trace) hits.push_back(json{{"index", h.index}, {"level", h.level}});
        j["integral_prefixes"] = hits;
      }
      return j.dump(2);
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "f,s,n,mode,backend,value,lo,hi,decimal,is_integer\n";
      out << csv_escape(r.f) << "," << csv_escape(r.s) << "," << r.n << "," << mode_name(r.mode)
          << "," << r.backend << ",";
      out << (r.exact ? value : "") << ",";
      out << (r.enclosure ? rat_string(r.enclosure->lo) : "") << ","
          << (r.enclosure ? rat_string(r.enclosure->hi) : "") << ",";
      out << (r.exact ? decimal : (r.enclosure ? decimal_string(r.enclosure->lo, kDecimalDigits) : ""));
      out << "," << (r.exact ? (whole ? "true" : "false") : "");
      out << "\n";
      return out.str();
    }
    default: {
      std::ostringstream out;
      if (r.exact) {
        out << value << " (~" << decimal << ")";
        if (whole) out << " integer";
      } else if (r.enclosure) {
        out << enclosure_text(*r.enclosure);
      }
      if (r.traced) {
        out << "\nintegral prefixes:";
        if (r.trace.empty()) out << " none";
        for (const auto& h : r.trace) out << " (" << h.index << "," << h.level << ")";
      }
      out << "\n";
      return out.str();
    }
  }
}

std::string render_certificate(const Certificate& cert, OutputFormat format) {
  if (format == OutputFormat::Json) return certificate_json(cert).dump(2);
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "kind,method,f,s,n,mode,prime,valuation,valuation_exact,integer,cross_checked\n";
    out << cert_kind_name(cert.kind) << "," << cert.method << "," << csv_escape(cert.spec.f.str())
        << "," << csv_escape(cert.spec.s.str()) << "," << cert.spec.n << ","
        << mode_name(cert.spec.mode) << ",";
    if (cert.kind == CertKind::ValuationNegative)
      out << cert.prime << "," << cert.valuation << "," << (cert.valuation_exact ? "true" : "false");
    else
      out << ",,";
    out << "," << (cert.integer_value ? cert.integer_value->get_str() : "") << ","
        << (cert.cross_checked ? "true" : "false") << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << cert_kind_name(cert.kind) << " [" << cert.method << "] for H"
      << (cert.spec.mode == SumMode::Star ? "*" : "") << "_{" << cert.spec.k() << ", "
      << cert.spec.f.str() << "}((" << cert.spec.s.str() << "), " << cert.spec.n << ")";
  switch (cert.kind) {
    case CertKind::ValuationNegative:
      out << ": v_" << cert.prime << (cert.valuation_exact ? " = " : " <= ") << cert.valuation;
      break;
    case CertKind::BoundBelowOne:
      out << ": value in (0, 1)";
      break;
    case CertKind::StrictlyBetween:
      out << ": value in (" << cert.lower_int.get_str() << ", " << cert.upper_int.get_str() << ")";
      break;
    case CertKind::IntegerException:
      out << ": integer " << (cert.integer_value ? cert.integer_value->get_str() : "?");
      break;
  }
  if (cert.exact_value)
    out << "; exact " << rat_string(*cert.exact_value) << " (~"
        << decimal_string(*cert.exact_value, kDecimalDigits) << ")";
  if (cert.bound) out << "; bound: " << cert.bound->claim << " " << verdict_name(cert.bound->verdict);
  if (cert.cross_checked) out << "; cross-checked";
  out << "\n";
  return out.str();
}

std::string render_table1(const std::vector<Table1Row>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const auto& r : rows) j.push_back(json{{"k", r.k}, {"p", r.pk}, {"n_k", r.nk}});
    return j.dump(2);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "k,p,n_k\n";
    for (const auto& r : rows) out << r.k << "," << r.pk << "," << r.nk << "\n";
    return out.str();
  }
  for (const auto& r : rows) out << r.k << " " << r.pk << " " << r.nk << "\n";
  return out.str();
}

std::string render_value_table(int id, const std::vector<ValueRow>& rows, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const auto& r : rows) {
      json row{{"k", r.k}, {"n", r.n}, {"status", r.status}};
      if (r.value) row["value"] = enclosure_json(*r.value);
      if (r.extended) row["extended"] = true;
      j.push_back(row);
    }
    return json{{"table", id}, {"rows", j}}.dump(2);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "k,n,lo,hi,lo_decimal,hi_decimal,status\n";
    for (const auto& r : rows) {
      out << r.k << "," << r.n << ",";
      if (r.value)
        out << rat_string(r.value->lo) << "," << rat_string(r.value->hi) << ","
            << decimal_string(r.value->lo, kDecimalDigits) << ","
            << decimal_string(r.value->hi, kDecimalDigits);
      else
        out << ",,,";
      out << "," << csv_escape(r.status) << "\n";
    }
    return out.str();
  }
  for (const auto& r : rows) {
    out << "k=" << r.k << " n=" << r.n << " ";
    if (r.value)
      out << enclosure_text(*r.value);
    else
      out << r.status;
    if (r.extended) out << " [extended]";
    out << "\n";
  }
  return out.str();
}

std::string render_sweep(const SweepResult& result, OutputFormat format) {
  json kinds(result.kind_counts);
  json methods(result.method_counts);
  json integers = json::array();
  for (const auto& e : result.integer_cases)
    integers.push_back(json{
        {"n", e.n}, {"k", e.k}, {"s", e.s}, {"expected", e.expected}});
  json j{{"total", result.total},
         {"kinds", kinds},
         {"methods", methods},
         {"integer_cases", integers},
         {"expected_integer_cases", result.expected_integer_cases},
         {"unsupported", result.unsupported},
         {"errors", result.errors},
         {"wall_seconds", result.wall_seconds},
         {"ok", result.ok()}};
  if (format == OutputFormat::Json) return j.dump(2);
  if (format == OutputFormat::Csv) {
    std::ostringstream out;
    out << "total,integers,expected_integers,unsupported,ok\n";
    out << result.total << "," << result.integer_cases.size() << ","
        << result.expected_integer_cases << "," << result.unsupported << ","
        << (result.ok() ? "true" : "false") << "\n";
    return out.str();
  }
  std::ostringstream out;
  out << "specs: " << result.total << "\n";
  for (const auto& [kind, count] : result.kind_counts) out << "  " << kind << ": " << count << "\n";
  out << "integer cases: " << result.integer_cases.size() << " (expected "
      << result.expected_integer_cases << ")\n";
  for (const auto& e : result.integer_cases)
    out << "  n=" << e.n << " k=" << e.k << " s=(" << e.s << ")"
        << (e.expected ? "" : " UNEXPECTED") << "\n";
  if (result.unsupported) out << "unsupported: " << result.unsupported << "\n";
  for (const auto& msg : result.errors) out << "error: " << msg << "\n";
  out << (result.ok() ? "ok" : "NOT OK") << " in " << result.wall_seconds << "s\n";
  return out.str();
}

std::string render_bound_reports(const std::vector<BoundReport>& reports, OutputFormat format) {
  if (format == OutputFormat::Json) {
    json j = json::array();
    for (const auto& r : reports) j.push_back(bound_json(r));
    return j.dump(2);
  }
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    out << "claim,lhs_lo,lhs_hi,rhs_lo,rhs_hi,verdict\n";
    for (const auto& r : reports)
      out << csv_escape(r.claim) << "," << rat_string(r.lhs.lo) << "," << rat_string(r.lhs.hi)
          << "," << rat_string(r.rhs.lo) << "," << rat_string(r.rhs.hi) << ","
          << verdict_name(r.verdict) << "\n";
    return out.str();
  }
  for (const auto& r : reports)
    out << verdict_name(r.verdict) << ": " << r.claim << "\n";
  return out.str();
}

}  // namespace mrs
