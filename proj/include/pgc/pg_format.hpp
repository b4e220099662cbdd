#ifndef PGC_PG_FORMAT_HPP
#define PGC_PG_FORMAT_HPP

#include <iosfwd>
#include <string>

#include "pgc/pi.hpp"
#include "pgc/plane_graph.hpp"

namespace pgc {

// Text graph format:
//   pg <plane|planar> <directed|undirected> <n> <m>
//   n lines: node i's counterclockwise list of edge-ends `edgeId:<0|1>`
//   outer <edgeId:side>        (`outer -` when m = 0)
//   dir <m bits>               (present iff directed)
//   nest <min:host:own> ...    (present iff more than one component)
struct PgFile {
    EmbedMode mode = EmbedMode::Plane;
    PlaneGraph graph;
};

PgFile parse_pg(const std::string& text);
std::string write_pg(const PlaneGraph& g, EmbedMode mode);

PgFile load_pg_file(const std::string& path);
void save_pg_file(const std::string& path, const PlaneGraph& g, EmbedMode mode);

}  // namespace pgc

#endif  // PGC_PG_FORMAT_HPP
