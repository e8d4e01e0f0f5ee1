#include "qsb/json_io.hpp"

#include <fstream>

namespace qsb {

using nlohmann::json;

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4)
        throw ParseError("quaternion must be a 4-element array [w,x,y,z]");
    for (const auto& v : j)
        if (!v.is_number()) throw ParseError("quaternion components must be numbers");
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>(), j[3].get<double>()};
}

json to_json(const Frame& f) {
    return json::array({to_json(f.i.value()), to_json(f.j.value()), to_json(f.k.value())});
}

Frame frame_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3) throw ParseError("frame must be [[i],[j],[k]]");
    try {
        const Frame fr(ImaginaryUnit(quaternion_from_json(j[0])), ImaginaryUnit(quaternion_from_json(j[1])));
        const Quaternion k = quaternion_from_json(j[2]);
        if ((fr.k.value() - k).norm() > 1e-10) throw ParseError("frame k entry does not equal i*j");
        return fr;
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid frame: ") + e.what());
    }
}

json to_json(const HoloSeries& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    return json{{"frame", to_json(f.frame)}, {"radius", f.radius}, {"coeffs", coeffs}};
}

HoloSeries holo_from_json(const json& j) {
    if (!j.is_object() || !j.contains("frame") || !j.contains("coeffs"))
        throw ParseError("holomorphic series needs \"frame\" and \"coeffs\"");
    HoloSeries f{frame_from_json(j.at("frame")), {}, j.value("radius", 1.0)};
    if (f.radius <= 0.0) throw ParseError("series radius must be positive");
    for (const auto& c : j.at("coeffs")) f.coeffs.push_back(quaternion_from_json(c));
    return f;
}

json to_json(const SliceSeries& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
    return json{{"radius", f.radius}, {"coeffs", coeffs}};
}

SliceSeries slice_from_json(const json& j) {
    if (!j.is_object() || !j.contains("coeffs")) throw ParseError("slice series needs \"coeffs\"");
    SliceSeries f{{}, j.value("radius", 1.0)};
    if (f.radius <= 0.0) throw ParseError("series radius must be positive");
    for (const auto& c : j.at("coeffs")) f.coeffs.push_back(quaternion_from_json(c));
    return f;
}

namespace {

json matrix_to_json(const SymMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.n; ++r) {
        json row = json::array();
        for (int c = 0; c < m.n; ++c) row.push_back(m.at(r, c));
        rows.push_back(row);
    }
    return rows;
}

SymMatrix matrix_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n) throw ParseError("matrix has wrong row count");
    SymMatrix m(n);
    for (int r = 0; r < n; ++r) {
        if (!j[static_cast<std::size_t>(r)].is_array() || static_cast<int>(j[static_cast<std::size_t>(r)].size()) != n)
            throw ParseError("matrix has wrong column count");
        for (int c = 0; c < n; ++c) m.at(r, c) = j[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)].get<double>();
    }
    return m;
}

}  // namespace

json to_json(const FirstKindKernel& k) {
    return json{{"N", k.truncation}, {"gram", matrix_to_json(k.gram)}, {"coeff", matrix_to_json(k.coeff)}};
}

FirstKindKernel first_kind_from_json(const json& j) {
    if (!j.is_object() || !j.contains("N") || !j.contains("gram") || !j.contains("coeff"))
        throw ParseError("first kind kernel needs \"N\", \"gram\", \"coeff\"");
    const int n = j.at("N").get<int>();
    if (n < 0) throw ParseError("kernel truncation must be nonnegative");
    FirstKindKernel k{n, matrix_from_json(j.at("gram"), n + 1), matrix_from_json(j.at("coeff"), n + 1),
                      BallRule{}, 0.0};
    return k;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << j.dump(2) << '\n';
}

}  // namespace qsb
