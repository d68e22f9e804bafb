#ifndef FRACSDE_IO_HPP
#define FRACSDE_IO_HPP

#include <Eigen/Dense>
#include <string>

#include "fracsde/grid.hpp"
#include "fracsde/noise1d.hpp"

namespace fracsde {

// 17-significant-digit decimal; "." separator, LF endings, UTF-8.
std::string format_g17(double v);

// header `t,value`, one row per grid point
std::string path_csv(const NoisePath& p);

// header `t,coord_0,...`; used for trajectories and convolution paths
std::string matrix_csv(const TimeGrid& grid, const Eigen::MatrixXd& values);

void write_file(const std::string& path, const std::string& content);

} // namespace fracsde

#endif
