#include "arr/report.hpp"

namespace arr {

Json rat_node(const Rat& v) {
    Json j;
    j["rat"] = v.get_num().get_str() +
               (v.get_den() == 1 ? "" : "/" + v.get_den().get_str());
    j["dec"] = decimal_string(v);
    return j;
}

Json int_node(const Int& v) {
    if (v.fits_slong_p()) return Json(v.get_si());
    return Json(v.get_str());
}

namespace {

Json tvector_node(const TVector& tv) {
    Json j;
    j["d"] = tv.d;
    for (auto& [m, t] : tv.counts) j["t" + std::to_string(m)] = int_node(t);
    return j;
}

Json chern_node(const ChernInvariants& ci) {
    Json j;
    j["c1sq"] = int_node(ci.c1sq);
    j["c2"] = int_node(ci.c2);
    if (ci.slope) j["slope"] = rat_node(*ci.slope);
    if (ci.h_linear) j["h_linear"] = rat_node(*ci.h_linear);
    return j;
}

void set_check(Json& checks, const char* name, bool pass, bool& ok) {
    checks[name] = pass ? "pass" : "fail";
    if (!pass) ok = false;
}

}  // namespace

Analysis analyze_tvector(const TVector& tv, FieldClass field_class,
                         bool field_class_known, bool from_coordinates) {
    Analysis out;
    Json& doc = out.doc;
    doc["tvector"] = tvector_node(tv);
    const ChernInvariants ci = chern(tv);
    doc["chern"] = chern_node(ci);

    Json checks;
    const bool pair_ok = pair_identity_check(tv);
    set_check(checks, "pair_identity", pair_ok, out.ok);
    checks["classification"] = to_string(classify(tv));

    const SlopeBoundsReport sb = slope_bounds_check(tv);
    if (!sb.applicable) {
        checks["slope_bounds"] = "n/a";
        checks["positivity"] = "n/a";
    } else {
        set_check(checks, "slope_bounds", sb.ok(), out.ok);
        set_check(checks, "positivity", positivity_check(tv), out.ok);
    }

    if (classify(tv) == ArrClass::Trivial ||
        classify(tv) == ArrClass::QuasiTrivial) {
        checks["c2_lower_bound"] = "n/a";
    } else {
        set_check(checks, "c2_lower_bound",
                  c2_lower_bound_check(tv, tv.max_multiplicity()), out.ok);
    }

    set_check(checks, "h_linear_forms", h_linear_forms_agree(tv), out.ok);

    if (field_class_known) {
        doc["field_class"] = to_string(field_class);
        const CeilingReport cr = field_ceiling_check(tv, field_class);
        if (!cr.applicable) {
            checks["field_ceiling"] = "n/a";
        } else {
            set_check(checks, "field_ceiling", cr.ok(), out.ok);
            if (!cr.finding.empty()) checks["field_ceiling_finding"] = cr.finding;
        }
    }
    doc["checks"] = std::move(checks);

    if (field_class_known && field_class == FieldClass::RealEmbeddable &&
        from_coordinates) {
        const FaceData f = face_counts(tv, true);
        Json faces;
        faces["f0"] = int_node(f.f0);
        faces["f1"] = int_node(f.f1);
        faces["f2"] = int_node(f.f2);
        faces["simplicial"] = f.simplicial;
        doc["faces"] = std::move(faces);
    }
    return out;
}

Analysis analyze_arrangement(const Arrangement& arr) {
    const TVector tv = tvector(compute_incidence(arr));
    Analysis out = analyze_tvector(tv, classify_field(arr), true, true);
    Json head;
    head["field"] = arr.desc->name();
    head["provenance"] = arr.provenance;
    head.update(out.doc);
    out.doc = std::move(head);
    return out;
}

Analysis verify_arrangement(const Arrangement& arr) {
    const IncidenceStructure inc = compute_incidence(arr);
    const TVector tv = tvector(inc);
    Analysis out = analyze_tvector(tv, classify_field(arr), true, true);
    Json head;
    head["field"] = arr.desc->name();
    head["provenance"] = arr.provenance;
    head.update(out.doc);
    out.doc = std::move(head);

    Json theorems;
    if (tv.t(tv.d) == 1) {
        theorems["dbe"] = "n/a (pencil)";
    } else {
        const DbeReport dbe = dbe_verify(inc);
        Json dj;
        dj["points"] = dbe.r;
        dj["lines"] = dbe.d;
        dj["inequality"] = dbe.inequality_ok ? "pass" : "fail";
        if (!dbe.inequality_ok) out.ok = false;
        if (dbe.r == dbe.d) {
            dj["equality_class"] = to_string(dbe.equality);
            if (dbe.equality == DbeReport::Equality::FiniteProjectivePlane)
                dj["plane_order"] = dbe.plane_order;
        }
        theorems["dbe"] = std::move(dj);

        if (dbe.r == dbe.d) {
            const IncidenceMatrix m = IncidenceMatrix::from_incidence(inc);
            try {
                const std::vector<int> sigma = zero_diagonal_permutation(m);
                theorems["zero_diagonal_permutation"] = "pass";
            } catch (const NoZeroDiagonal&) {
                theorems["zero_diagonal_permutation"] = "fail";
                out.ok = false;
            }
        } else {
            theorems["zero_diagonal_permutation"] = "n/a (r != d)";
        }

        if (dbe.equality == DbeReport::Equality::FiniteProjectivePlane &&
            dbe.plane_order >= 2) {
            Json rj;
            try {
                const ReconstructedField rf = reconstruct_field(arr);
                rj["q"] = rf.q;
                rj["k_prime_size"] = (long)rf.elements.size();
                rj["matched_order"] = rf.matched_order ? "pass" : "fail";
                rj["is_field"] = rf.is_field ? "pass" : "fail";
                if (!rf.matched_order || !rf.is_field) out.ok = false;
            } catch (const Error& e) {
                rj["error"] = e.what();
                out.ok = false;
            }
            theorems["reconstruction"] = std::move(rj);
        }
    }
    out.doc["theorems"] = std::move(theorems);
    out.doc["verdict"] = out.ok ? "pass" : "fail";
    return out;
}

namespace {

bool is_rat_leaf(const Json& j) {
    return j.is_object() && j.size() == 2 && j.contains("rat") &&
           j.contains("dec");
}

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
    return j.dump();
}

void render(const Json& j, const std::string& key, int depth,
            std::string& out) {
    const std::string pad(2 * depth, ' ');
    if (is_rat_leaf(j)) {
        out += pad + key + " = " + j["rat"].get<std::string>() + " (" +
               j["dec"].get<std::string>() + ")\n";
        return;
    }
    if (j.is_object()) {
        out += pad + key + "\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            render(it.value(), it.key(), depth + 1, out);
        return;
    }
    if (j.is_array()) {
        out += pad + key + " = " + j.dump() + "\n";
        return;
    }
    out += pad + key + " = " + scalar_text(j) + "\n";
}

}  // namespace

std::string render_text(const Json& doc) {
    std::string out;
    for (auto it = doc.begin(); it != doc.end(); ++it)
        render(it.value(), it.key(), 0, out);
    return out;
}

}  // namespace arr
