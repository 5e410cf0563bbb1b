#include "shepherd/harness/trajectory.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "shepherd/errors.hpp"

namespace shepherd::harness {

void export_trajectory(const MissionTrace& trace, std::ostream& out) {
  out << "step,time_s,dog_x,dog_y";
  for (int i = 0; i < trace.n_sheep; ++i) out << ",sheep" << i << "_x,sheep" << i << "_y";
  out << ",cm_x,cm_y,subgoal_x,subgoal_y,active_skill,reward\n";

  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::fixed << std::setprecision(6);
  for (const auto& s : trace.steps) {
    out << s.step << ',' << s.step * trace.dt << ',' << s.dog.x << ',' << s.dog.y;
    for (const auto& p : s.sheep) out << ',' << p.x << ',' << p.y;
    out << ',' << s.cm.x << ',' << s.cm.y << ',' << s.subgoal.x << ',' << s.subgoal.y << ','
        << s.skill << ',' << s.reward << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

void export_trajectory(const MissionTrace& trace, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw FileError(path, "cannot open trajectory for writing");
  export_trajectory(trace, out);
  out.flush();
  if (!out) throw FileError(path, "write failed");
}

std::vector<TrajectoryRow> read_trajectory(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidInput("trajectory: missing header");
  std::vector<std::string> header;
  {
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) header.push_back(cell);
  }
  if (header.size() < 10 || (header.size() - 10) % 2 != 0)
    throw InvalidInput("trajectory: unexpected header");
  const std::size_t n_sheep = (header.size() - 10) / 2;

  std::vector<TrajectoryRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != header.size()) throw InvalidInput("trajectory: row has wrong column count");
    auto num = [&](std::size_t i) {
      try {
        return std::stod(cells[i]);
      } catch (const std::exception&) {
        throw InvalidInput("trajectory: bad number '" + cells[i] + "'");
      }
    };
    TrajectoryRow r;
    r.step = static_cast<int>(num(0));
    r.time_s = num(1);
    r.dog = {num(2), num(3)};
    std::size_t c = 4;
    for (std::size_t k = 0; k < n_sheep; ++k, c += 2) r.sheep.push_back({num(c), num(c + 1)});
    r.cm = {num(c), num(c + 1)};
    r.subgoal = {num(c + 2), num(c + 3)};
    r.skill = cells[c + 4];
    r.reward = num(c + 5);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace shepherd::harness
