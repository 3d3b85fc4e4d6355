#include "nlslab/checkpoint.hpp"

#include <cstring>
#include <stdexcept>

namespace nlslab {

namespace {
constexpr char kMagic[8] = {'N', 'L', 'S', 'C', 'H', 'K', '0', '1'};
}

void write_checkpoint(const std::string& path, const Field& f, const std::string& config_hash) {
    json header;
    header["dimension"] = f.grid.dim;
    header["n"] = {f.grid.n[0], f.grid.n[1]};
    header["box"] = {f.grid.box[0], f.grid.box[1]};
    header["time"] = f.time;
    header["config_hash"] = config_hash;
    const std::string htext = header.dump();

    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out.write(kMagic, 8);
    const std::uint64_t hlen = htext.size();
    out.write(reinterpret_cast<const char*>(&hlen), 8);
    out.write(htext.data(), htext.size());
    out.write(reinterpret_cast<const char*>(f.v.data()), static_cast<std::streamsize>(f.v.size() * sizeof(cplx)));
}

Field read_checkpoint(const std::string& path, json* header_out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    char magic[8];
    in.read(magic, 8);
    if (std::memcmp(magic, kMagic, 8) != 0) throw std::runtime_error("bad checkpoint magic in " + path);
    std::uint64_t hlen = 0;
    in.read(reinterpret_cast<char*>(&hlen), 8);
    std::string htext(hlen, '\0');
    in.read(htext.data(), static_cast<std::streamsize>(hlen));
    json header = json::parse(htext);
    Grid g;
    g.dim = header["dimension"].get<int>();
    g.n = {header["n"][0].get<int>(), header["n"][1].get<int>()};
    g.box = {header["box"][0].get<double>(), header["box"][1].get<double>()};
    Field f(g, header["time"].get<double>());
    in.read(reinterpret_cast<char*>(f.v.data()), static_cast<std::streamsize>(f.v.size() * sizeof(cplx)));
    if (!in) throw std::runtime_error("truncated checkpoint " + path);
    if (header_out) *header_out = header;
    return f;
}

} // namespace nlslab
