#include "smartcup/pneuma/trace.hpp"

#include <fstream>

#include "smartcup/common/csv.hpp"

namespace smartcup::pneuma {

void Trace::save_csv(const std::string& path) const {
    csv::Writer w(path);
    w.header("t,p1,p2,p3,p4,fx,fy,fz,tx,ty,tz,c1,c2,c3,c4");
    for (std::size_t k = 0; k < t.size(); ++k) {
        w.field(t[k], 6);
        for (int i = 0; i < 4; ++i) w.field(p_vac[i][k], 2);
        for (int i = 0; i < 6; ++i) w.field(ft[i][k], 6);
        for (int i = 0; i < 4; ++i) w.field(contact[i][k], 6);
        w.endrow();
    }
}

Trace Trace::load_csv(const std::string& path) {
    const csv::Table tb = csv::read(path);
    static const char* names[] = {"t",  "p1", "p2", "p3", "p4", "fx", "fy", "fz",
                                  "tx", "ty", "tz", "c1", "c2", "c3", "c4"};
    int col[15];
    for (int i = 0; i < 15; ++i) col[i] = tb.column(names[i]);
    Trace tr;
    for (const auto& row : tb.rows) {
        tr.t.push_back(row[col[0]]);
        for (int i = 0; i < 4; ++i) tr.p_vac[i].push_back(row[col[1 + i]]);
        for (int i = 0; i < 6; ++i) tr.ft[i].push_back(row[col[5 + i]]);
        for (int i = 0; i < 4; ++i) tr.contact[i].push_back(row[col[11 + i]]);
    }
    return tr;
}

void Trace::save_meta(const std::string& path) const {
    nlohmann::json j = {{"scenario", meta.scenario},
                        {"mode", to_string(meta.mode)},
                        {"seed", meta.seed},
                        {"params", meta.params}};
    std::ofstream out(path);
    out << j.dump(2) << '\n';
}

void Trace::load_meta(const std::string& path) {
    std::ifstream in(path);
    if (!in) return;  // meta is optional on load
    nlohmann::json j;
    in >> j;
    meta.scenario = j.value("scenario", "");
    meta.mode = j.value("mode", "full") == "pwm" ? VacuumMode::Pwm : VacuumMode::Full;
    meta.seed = j.value("seed", 0ULL);
    meta.params = j.value("params", nlohmann::json::object());
}

} // namespace smartcup::pneuma
