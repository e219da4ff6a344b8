#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "evanslab/essential_spectrum.hpp"
#include "evanslab/riccati_evans.hpp"

namespace evanslab {

/// UTF-8 comma-separated writer with a fixed header row per artifact kind.

inline void write_border_csv(std::ostream& os, const std::vector<BorderCurve>& curves) {
  os << "k,re_lambda,im_lambda,branch,side\n";
  os << std::setprecision(16);
  for (const auto& c : curves)
    for (size_t i = 0; i < c.k.size(); ++i)
      os << c.k[i] << ',' << c.lambda[i].real() << ',' << c.lambda[i].imag() << ',' << c.branch << ','
         << c.side << '\n';
}

inline void write_region_csv(std::ostream& os, const RegionMap& m) {
  os << "re_lambda,im_lambda,count_plus,count_minus,index,on_border\n";
  os << std::setprecision(16);
  for (size_t i = 0; i < m.lambda.size(); ++i)
    os << m.lambda[i].real() << ',' << m.lambda[i].imag() << ',' << m.count_plus[i] << ','
       << m.count_minus[i] << ',' << m.index[i] << ',' << (m.on_border[i] ? 1 : 0) << '\n';
}

inline void write_evans_csv(std::ostream& os, const EvansReport& rep) {
  os << "re_lambda,im_lambda,re_E,im_E,phase\n";
  os << std::setprecision(16);
  for (const auto& s : rep.samples)
    os << s.lambda.real() << ',' << s.lambda.imag() << ',' << s.E.real() << ',' << s.E.imag() << ','
       << std::arg(s.E) << '\n';
}

inline void write_file(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  writer(f);
}

}  // namespace evanslab
