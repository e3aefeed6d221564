#include "heilbronn/certificate_io.hpp"

#include <json.hpp>

#include "heilbronn/cache.hpp"

namespace hb {

using nlohmann::json;

std::string certificate_to_json(const Certificate& cert) {
    json doc;
    doc["tool_version"] = kToolVersion;
    doc["p"] = cert.p;
    doc["params"] = {{"A", cert.params.A},
                     {"B", cert.params.B},
                     {"C", cert.params.C},
                     {"D", cert.params.D}};
    json cells = json::array();
    for (const MCell& c : cert.cells)
        cells.push_back({{"i", c.i}, {"j", c.j}, {"lambda", c.lambda}, {"s", c.s}, {"g", c.g}});
    doc["cells"] = std::move(cells);
    doc["phi"] = cert.phi;  // row-major in (a, b, c)
    doc["psi"] = cert.psi.coeffs();
    json transcript = json::array();
    for (const CellTranscript& t : cert.transcript)
        transcript.push_back({{"i", t.i},
                              {"j", t.j},
                              {"lambda", t.lambda},
                              {"points", t.points},
                              {"orders", t.orders}});
    doc["transcript"] = std::move(transcript);
    return doc.dump(2) + "\n";
}

Certificate certificate_from_json(const std::string& text) {
    json doc = json::parse(text);
    Certificate cert;
    cert.p = doc.at("p").get<u64>();
    Prime p(cert.p);
    const auto& pr = doc.at("params");
    cert.params = {pr.at("A").get<u64>(), pr.at("B").get<u64>(), pr.at("C").get<u64>(),
                   pr.at("D").get<u64>()};
    for (const auto& c : doc.at("cells")) {
        MCell cell = MCell::make(p, c.at("i").get<u32>(), c.at("j").get<u32>(),
                                 c.at("lambda").get<u64>());
        if (cell.s != c.at("s").get<u64>() || cell.g != c.at("g").get<u64>())
            throw std::invalid_argument("certificate_from_json: inconsistent cell decomposition");
        cert.cells.push_back(cell);
    }
    cert.phi = doc.at("phi").get<std::vector<u64>>();
    cert.psi = PolyFp(cert.p, doc.at("psi").get<std::vector<u64>>());
    if (doc.contains("transcript")) {
        for (const auto& t : doc.at("transcript")) {
            CellTranscript tr;
            tr.i = t.at("i").get<u32>();
            tr.j = t.at("j").get<u32>();
            tr.lambda = t.at("lambda").get<u64>();
            tr.points = t.at("points").get<std::vector<u64>>();
            tr.orders = t.at("orders").get<std::vector<u64>>();
            cert.transcript.push_back(std::move(tr));
        }
    }
    return cert;
}

}  // namespace hb
