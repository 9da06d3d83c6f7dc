#include "mld/report_io.hpp"

#include <sstream>

#include <json.hpp>

#include "mld/errors.hpp"
#include "mld/version.hpp"

namespace mld {

namespace {

using json = nlohmann::ordered_json;

long integer_field(const json& v, const char* what) {
    if (!v.is_number_integer() && !v.is_number_unsigned())
        throw InputError(std::string("support file: ") + what + " must be an integer");
    return v.get<long>();
}

Rational rational_field(const json& v, const char* what) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer() || v.is_number_unsigned()) return Rational(v.get<long>());
    throw InputError(std::string("support file: ") + what +
                     " must be a \"p/q\" string or an integer");
}

json vector_to_json(const std::vector<long>& v) { return json(v); }

std::string rational_to_wire(const Rational& r) { return to_string(r); }

std::string mld_to_wire(const MldValue& v) {
    return v.is_finite() ? to_string(v.value()) : std::string(kMinusInfinityToken);
}

std::string join_vector(const std::vector<long>& v) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out << ',';
        out << v[i];
    }
    out << ')';
    return out.str();
}

} // namespace

SupportDocument parse_support_document(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw InputError(std::string("support file: ") + e.what());
    }
    if (!doc.is_object()) throw InputError("support file: expected a JSON object");
    if (!doc.contains("dimension")) throw InputError("support file: missing \"dimension\"");
    if (!doc.contains("support")) throw InputError("support file: missing \"support\"");

    SupportDocument out;
    out.dimension = static_cast<int>(integer_field(doc["dimension"], "\"dimension\""));
    if (!doc["support"].is_array())
        throw InputError("support file: \"support\" must be an array of integer vectors");
    for (const auto& row : doc["support"]) {
        if (!row.is_array())
            throw InputError("support file: \"support\" must be an array of integer vectors");
        Exponent e;
        for (const auto& entry : row) e.e.push_back(integer_field(entry, "exponent"));
        out.support.push_back(std::move(e));
    }
    if (doc.contains("delta") && !doc["delta"].is_null()) {
        if (!doc["delta"].is_array())
            throw InputError("support file: \"delta\" must be an array of rationals");
        std::vector<Rational> delta;
        for (const auto& entry : doc["delta"]) delta.push_back(rational_field(entry, "delta entry"));
        out.delta = std::move(delta);
    }
    return out;
}

std::string render_json(const SupportSet& s, const BoundaryCoefficients& d,
                        const MldReport& report, const std::optional<LctResult>& lct) {
    json doc;
    doc["tool"] = kToolName;
    doc["version"] = kToolVersion;
    doc["assumptions"] = kAssumptionsBanner;
    doc["dimension"] = s.dimension();
    {
        json rows = json::array();
        for (const auto& m : s.points()) rows.push_back(vector_to_json(m.e));
        doc["support"] = std::move(rows);
    }
    {
        json entries = json::array();
        for (const auto& v : d.delta) entries.push_back(rational_to_wire(v));
        doc["delta"] = std::move(entries);
    }
    doc["log_canonical"] = report.log_canonical;
    doc["mld"] = mld_to_wire(report.mld);
    if (d.all_ones()) doc["hypersurface_mld"] = mld_to_wire(report.mld);
    if (report.witness) {
        doc["witness"] = vector_to_json(report.witness->w);
        json trace_doc;
        trace_doc["value"] = rational_to_wire(report.witness_trace->value);
        json members = json::array();
        for (const auto& m : report.witness_trace->members) members.push_back(vector_to_json(m.e));
        trace_doc["members"] = std::move(members);
        doc["witness_trace"] = std::move(trace_doc);
        doc["witness_in_proper_cone"] = *report.witness_in_proper_cone;
        doc["witness_meets_strict_transform"] = *report.witness_meets_strict_transform;
    }
    doc["multiplicity"] = report.multiplicity;
    doc["ordinary_blowup_discrepancy"] = rational_to_wire(report.ordinary_blowup_discrepancy);
    doc["smooth"] = report.smooth;
    doc["certified"] = report.certified;
    if (report.oracle) {
        json oracle_doc;
        oracle_doc["box"] = report.oracle->box_bound;
        oracle_doc["min"] = rational_to_wire(report.oracle->min_value);
        json mins = json::array();
        for (const auto& a : report.oracle->minimizers) mins.push_back(vector_to_json(a.w));
        oracle_doc["minimizers"] = std::move(mins);
        oracle_doc["interior"] = report.oracle->interior;
        oracle_doc["agrees"] = *report.oracle_agrees;
        doc["oracle"] = std::move(oracle_doc);
    }
    if (lct) {
        json lct_doc;
        lct_doc["raw"] = rational_to_wire(lct->raw);
        lct_doc["capped"] = rational_to_wire(lct->capped);
        doc["lct"] = std::move(lct_doc);
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const SupportSet& s, const BoundaryCoefficients& d,
                        const MldReport& report, const std::optional<LctResult>& lct) {
    std::ostringstream out;
    out << kToolName << ' ' << kToolVersion << '\n';
    out << "note: " << kAssumptionsBanner << '\n';
    out << '\n';
    out << "dimension: " << s.dimension() << '\n';
    out << "support:";
    for (const auto& m : s.points()) out << ' ' << join_vector(m.e);
    out << '\n';
    out << "delta:";
    for (const auto& v : d.delta) out << ' ' << rational_to_wire(v);
    out << '\n';
    out << '\n';
    out << "log canonical: " << (report.log_canonical ? "yes" : "no") << '\n';
    out << "mld: " << mld_to_wire(report.mld) << '\n';
    if (d.all_ones())
        out << "a(0;X) (X normal, non-degenerate): " << mld_to_wire(report.mld) << '\n';
    if (report.witness) {
        out << "witness: " << join_vector(report.witness->w) << '\n';
        out << "  trace value: " << rational_to_wire(report.witness_trace->value) << '\n';
        out << "  trace members:";
        for (const auto& m : report.witness_trace->members) out << ' ' << join_vector(m.e);
        out << '\n';
        out << "  in proper cone: " << (*report.witness_in_proper_cone ? "yes" : "no") << '\n';
        out << "  meets strict transform: "
            << (*report.witness_meets_strict_transform ? "yes" : "no") << '\n';
    }
    out << "multiplicity: " << report.multiplicity << '\n';
    out << "ordinary blowup discrepancy: " << rational_to_wire(report.ordinary_blowup_discrepancy)
        << '\n';
    out << "smooth: " << (report.smooth ? "yes" : "no") << '\n';
    out << "certified: " << (report.certified ? "yes" : "no") << '\n';
    if (report.oracle) {
        out << "oracle: box " << report.oracle->box_bound << ", min "
            << rational_to_wire(report.oracle->min_value) << ", minimizers "
            << report.oracle->minimizers.size() << ", interior "
            << (report.oracle->interior ? "yes" : "no") << ", agrees "
            << (*report.oracle_agrees ? "yes" : "no") << '\n';
    }
    if (lct)
        out << "lct: raw " << rational_to_wire(lct->raw) << ", capped "
            << rational_to_wire(lct->capped) << '\n';
    return out.str();
}

} // namespace mld
