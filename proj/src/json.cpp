#include "nsg/json.hpp"

namespace nsg {

namespace {

json int_to_json(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(to_string(v));
}

}  // namespace

json numerator_to_json(const Numerator& num) {
    json obj = json::object();
    const auto& c = num.q.coeffs();
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) obj[std::to_string(j)] = int_to_json(c[j]);
    return obj;
}

json record_to_json(const SemigroupReport& rep, const CheckRecord& rec,
                    bool with_timings) {
    json obj;
    obj["semigroup"] = rep.generators;
    obj["class"] = rep.class_tag;
    obj["check"] = rec.check;
    obj["status"] = std::string(to_string(rec.status));
    obj["lhs"] = rec.lhs;
    obj["rhs"] = rec.rhs;
    if (!rec.note.empty()) obj["note"] = rec.note;
    if (with_timings) obj["elapsed_us"] = rep.elapsed_us;
    return obj;
}

json info_to_json(const Semigroup& s, const Numerator& num,
                  const Classification& cls) {
    json obj;
    obj["generators"] = std::vector<std::int64_t>(s.generators().begin(),
                                                  s.generators().end());
    obj["m"] = s.edim();
    obj["mu"] = s.multiplicity();
    obj["F"] = s.frobenius();
    obj["G0"] = int_to_json(s.genus());
    obj["PF"] = cls.pf;
    obj["class"] = std::string(to_string(cls.tag));
    obj["pi"] = int_to_json(s.pi());
    obj["sigma1"] = int_to_json(s.sigma(1));
    obj["Qm"] = num.qm;
    if (cls.ci) obj["e"] = cls.ci->degrees;
    return obj;
}

}  // namespace nsg
