#pragma once

// Bundled regression fixtures. Figure-5 and village-27 attribute values come
// from tools/derive_fixtures.py; the figure-2 layout is hand-placed.

#include <string>
#include <vector>

#include "wsod/dataset.hpp"
#include "wsod/types.hpp"

namespace wsod::fixtures {

namespace detail {

struct Row {
  const char *id;
  double x;
  double y;
  double value;
};

inline SpatialDataset points(const std::vector<Row> &rows, const std::string &attribute, std::vector<Edge> edges = {}) {
  std::vector<PointSite> sites;
  sites.reserve(rows.size());
  for (const auto &r : rows)
    sites.push_back({SiteId(r.id), {r.x, r.y}, {{attribute, r.value}}});
  return SpatialDataset::from_points(std::move(sites), std::move(edges), {attribute});
}

} // namespace detail

// ---------------------------------------------------------------------------
// Eleven labelled sites around A. With radius 3 the buffer around A holds
// exactly B, K, J and H; A's only edges go to B, D and E.

inline constexpr double kFigure2Radius = 3.0;
inline const std::string kFigure2Attribute = "v";

inline SpatialDataset figure2() {
  return detail::points(
      {
          {"A", 0.0, 0.0, 12.0},
          {"B", 1.5, 0.5, 14.0},
          {"C", 3.5, 3.5, 15.0},
          {"D", 4.0, 1.0, 30.0},
          {"E", -1.0, -4.0, 11.0},
          {"F", 6.0, -1.0, 16.0},
          {"G", 2.0, -5.0, 13.0},
          {"H", 0.5, -2.5, 12.5},
          {"J", -2.0, -1.0, 13.5},
          {"K", -1.0, 2.0, 14.5},
          {"L", -4.0, 3.5, 15.5},
      },
      kFigure2Attribute,
      {
          {"A", "B", 1.581, 1.0},
          {"A", "D", 4.123, 3.0},
          {"A", "E", 4.123, 2.5},
          {"B", "C", 3.606, 2.0},
          {"B", "D", 2.55, 1.5},
          {"D", "F", 2.828, 2.0},
          {"E", "G", 3.162, 2.0},
          {"G", "H", 2.915, 1.0},
          {"J", "E", 3.162, 1.5},
          {"K", "L", 3.354, 2.0},
          {"C", "F", 5.148, 3.0},
          {"H", "J", 2.915, 1.0},
      });
}

// ---------------------------------------------------------------------------
// 289 villages (percent illiterate females). Under the buffer regime with
// radius 1.5 and theta 2, eleven tagged villages reproduce a reference z table
// of z-scores for the inverse-distance model and the plain-mean model:
//
//   village  weighted  classical
//   216      -2.74     -2.61
//   17       -2.70     -2.59
//   238      -2.46     -2.51
//   26       -2.29     -2.25
//   317      -2.28     -2.10
//   29       -1.87     -2.32
//   28       -1.76     -2.44
//   511       2.02      1.88
//   302       2.04      1.68
//   239       2.12      1.96
//   30        2.57      2.52
//
// Every other village stays within |z| <= 1.8 in both models.

inline constexpr double kFigure5Radius = 1.5;
inline const std::string kFigure5Attribute = "illit_f";

struct ReferenceZ {
  const char *id;
  double weighted;
  double classical;
};

inline const std::vector<ReferenceZ> &figure5_reference() {
  static const std::vector<ReferenceZ> table{
      {"216", -2.74, -2.61}, {"17", -2.70, -2.59}, {"238", -2.46, -2.51}, {"26", -2.29, -2.25},
      {"317", -2.28, -2.10}, {"29", -1.87, -2.32}, {"28", -1.76, -2.44}, {"511", 2.02, 1.88},
      {"302", 2.04, 1.68},   {"239", 2.12, 1.96},  {"30", 2.57, 2.52},
  };
  return table;
}

inline SpatialDataset figure5() {
  return detail::points(
      {
      {"216", 2.000, 2.000, 37.887},
      {"17", 6.000, 2.000, 38.109},
      {"238", 10.000, 2.000, 38.290},
      {"26", 14.000, 2.000, 38.661},
      {"317", 2.000, 6.000, 39.091},
      {"29", 6.000, 6.000, 37.554},
      {"28", 10.000, 6.000, 37.762},
      {"511", 14.000, 6.000, 50.271},
      {"302", 2.000, 10.000, 49.677},
      {"239", 6.000, 10.000, 50.440},
      {"30", 10.000, 10.000, 51.745},
      {"1", 2.349, 2.028, 46.330},
      {"2", 2.920, 2.770, 45.032},
      {"3", 2.113, 2.331, 46.152},
      {"4", 1.733, 3.170, 48.377},
      {"5", 1.721, 2.211, 45.428},
      {"6", 0.801, 1.957, 48.216},
      {"7", 1.724, 1.785, 44.325},
      {"8", 1.594, 0.871, 43.432},
      {"9", 2.136, 1.677, 47.827},
      {"10", 2.925, 1.236, 45.901},
      {"11", 6.349, 1.978, 48.937},
      {"12", 6.961, 2.718, 48.184},
      {"13", 6.086, 2.339, 45.683},
      {"14", 5.678, 3.156, 41.340},
      {"15", 5.732, 2.225, 44.413},
      {"16", 4.802, 2.072, 45.877},
      {"18", 5.725, 1.784, 46.428},
      {"19", 5.519, 0.901, 48.951},
      {"20", 6.138, 1.678, 44.645},
      {"21", 6.934, 1.247, 42.882},
      {"22", 10.350, 2.000, 45.949},
      {"23", 10.956, 2.726, 49.764},
      {"24", 10.107, 2.333, 41.640},
      {"25", 9.559, 3.116, 45.126},
      {"31", 9.701, 2.182, 48.196},
      {"32", 8.800, 2.035, 48.853},
      {"33", 9.704, 1.814, 40.422},
      {"34", 9.604, 0.867, 44.562},
      {"35", 10.136, 1.677, 48.913},
      {"36", 10.997, 1.332, 42.982},
      {"37", 14.349, 2.027, 45.085},
      {"38", 15.022, 2.629, 45.644},
      {"39", 14.105, 2.334, 42.161},
      {"40", 13.738, 3.171, 45.177},
      {"41", 13.698, 2.177, 45.462},
      {"42", 12.802, 2.068, 46.544},
      {"43", 13.732, 1.775, 44.628},
      {"44", 13.632, 0.858, 42.967},
      {"45", 14.112, 1.668, 48.679},
      {"46", 14.973, 1.298, 43.731},
      {"47", 2.350, 6.006, 41.218},
      {"48", 2.952, 6.730, 44.085},
      {"49", 2.087, 6.339, 49.222},
      {"50", 1.652, 7.148, 48.367},
      {"51", 1.698, 6.177, 46.096},
      {"52", 0.800, 6.017, 42.787},
      {"53", 1.711, 5.802, 44.882},
      {"54", 1.619, 4.862, 45.574},
      {"55", 2.092, 5.662, 48.467},
      {"56", 2.908, 5.215, 42.871},
      {"57", 6.350, 6.011, 46.561},
      {"58", 6.941, 6.745, 43.793},
      {"59", 6.108, 6.333, 38.713},
      {"60", 5.588, 7.127, 48.731},
      {"61", 5.701, 6.183, 42.123},
      {"62", 4.800, 5.984, 48.699},
      {"63", 5.698, 5.823, 40.283},
      {"64", 5.677, 4.844, 41.547},
      {"65", 6.134, 5.677, 38.429},
      {"66", 7.020, 5.368, 43.886},
      {"67", 10.349, 6.022, 39.013},
      {"68", 10.917, 6.774, 49.546},
      {"69", 10.121, 6.328, 42.283},
      {"70", 9.629, 7.141, 48.074},
      {"71", 9.705, 6.188, 40.780},
      {"72", 8.800, 6.030, 46.590},
      {"73", 9.733, 5.774, 39.205},
      {"74", 9.532, 4.895, 46.106},
      {"75", 10.123, 5.672, 39.796},
      {"76", 10.997, 5.332, 47.663},
      {"77", 14.349, 5.977, 44.729},
      {"78", 14.968, 6.709, 46.295},
      {"79", 14.100, 6.335, 43.235},
      {"80", 13.522, 7.101, 46.638},
      {"81", 13.728, 6.221, 42.455},
      {"82", 12.805, 5.889, 43.010},
      {"83", 13.727, 5.781, 44.140},
      {"84", 13.687, 4.842, 45.825},
      {"85", 14.105, 5.666, 44.529},
      {"86", 14.988, 5.319, 40.396},
      {"87", 2.350, 10.011, 45.883},
      {"88", 2.926, 10.763, 44.298},
      {"89", 2.102, 10.335, 41.492},
      {"90", 1.583, 11.125, 45.033},
      {"91", 1.719, 10.208, 40.091},
      {"92", 0.800, 9.978, 45.724},
      {"93", 1.725, 9.783, 41.250},
      {"94", 1.541, 8.891, 47.008},
      {"95", 2.101, 9.665, 42.691},
      {"96", 2.945, 9.260, 45.358},
      {"97", 6.349, 10.025, 43.605},
      {"98", 7.027, 10.620, 42.717},
      {"99", 6.121, 10.328, 42.627},
      {"100", 5.565, 11.118, 45.827},
      {"101", 5.735, 10.228, 44.370},
      {"102", 4.801, 9.942, 44.012},
      {"103", 5.727, 9.781, 44.308},
      {"104", 5.625, 8.860, 45.990},
      {"105", 6.112, 9.668, 43.371},
      {"106", 6.897, 9.203, 46.079},
      {"107", 10.349, 9.981, 43.475},
      {"108", 10.979, 10.694, 47.136},
      {"109", 10.137, 10.322, 44.661},
      {"110", 9.672, 11.154, 43.893},
      {"111", 9.716, 10.205, 43.779},
      {"112", 8.800, 9.996, 43.166},
      {"113", 9.710, 9.803, 44.150},
      {"114", 9.741, 8.828, 42.173},
      {"115", 10.092, 9.662, 44.385},
      {"116", 11.017, 9.363, 40.686},
      {"117", 0.014, 0.040, 45.286},
      {"118", 1.152, -0.035, 42.301},
      {"119", 2.065, 0.101, 48.154},
      {"120", 2.926, -0.118, 44.967},
      {"121", 3.867, -0.177, 44.225},
      {"122", 4.992, -0.149, 43.801},
      {"123", 6.086, 0.130, 47.210},
      {"124", 6.839, 0.057, 47.214},
      {"125", 8.081, -0.180, 41.720},
      {"126", 8.968, 0.132, 47.767},
      {"127", 9.804, -0.080, 44.908},
      {"128", 11.123, 0.094, 45.077},
      {"129", 11.886, 0.009, 43.951},
      {"130", 12.858, -0.074, 45.365},
      {"131", 13.962, -0.017, 43.642},
      {"132", 14.967, 0.177, 48.014},
      {"133", 15.842, -0.001, 47.320},
      {"134", -0.092, 1.058, 43.305},
      {"135", 0.805, 1.161, 45.532},
      {"136", 3.870, 1.141, 47.432},
      {"137", 4.842, 0.910, 44.486},
      {"138", 5.983, 0.858, 44.830},
      {"139", 7.942, 0.966, 41.851},
      {"140", 12.079, 0.985, 44.147},
      {"141", 12.923, 0.855, 45.645},
      {"142", 14.172, 1.001, 47.412},
      {"143", 16.036, 0.928, 43.059},
      {"144", 0.045, 1.836, 44.953},
      {"145", 3.032, 2.026, 41.467},
      {"146", 3.841, 1.816, 42.818},
      {"147", 6.801, 1.993, 46.240},
      {"148", 7.928, 1.944, 44.940},
      {"149", 11.175, 2.021, 46.213},
      {"150", 11.987, 1.827, 43.978},
      {"151", 14.810, 1.819, 44.125},
      {"152", 16.108, 1.998, 48.391},
      {"153", -0.114, 2.937, 46.143},
      {"154", 1.025, 2.999, 44.323},
      {"155", 2.193, 3.057, 47.050},
      {"156", 3.873, 2.897, 48.833},
      {"157", 4.922, 2.812, 47.412},
      {"158", 8.021, 3.090, 46.906},
      {"159", 8.916, 2.941, 47.131},
      {"160", 10.053, 3.036, 45.307},
      {"161", 11.942, 2.899, 43.543},
      {"162", 13.041, 2.915, 48.134},
      {"163", 16.117, 2.844, 44.360},
      {"164", 0.141, 4.039, 46.767},
      {"165", 1.013, 3.884, 41.508},
      {"166", 2.113, 4.058, 46.761},
      {"167", 2.965, 4.109, 42.656},
      {"168", 4.172, 3.926, 45.256},
      {"169", 5.096, 3.849, 44.489},
      {"170", 5.824, 3.952, 45.304},
      {"171", 7.182, 4.013, 43.965},
      {"172", 8.105, 3.905, 45.524},
      {"173", 8.964, 3.854, 46.801},
      {"174", 10.146, 3.870, 46.050},
      {"175", 11.025, 4.026, 45.380},
      {"176", 11.995, 4.146, 47.720},
      {"177", 12.990, 3.967, 44.517},
      {"178", 14.003, 4.118, 44.858},
      {"179", 14.993, 4.091, 45.752},
      {"180", 15.966, 4.128, 42.370},
      {"181", -0.039, 5.041, 45.695},
      {"182", 0.900, 4.860, 42.607},
      {"183", 2.154, 5.071, 45.763},
      {"184", 3.879, 5.151, 47.281},
      {"185", 4.896, 5.065, 48.459},
      {"186", 8.109, 4.939, 44.220},
      {"187", 9.049, 5.177, 49.581},
      {"188", 9.983, 5.025, 48.760},
      {"189", 12.105, 4.861, 43.338},
      {"190", 12.862, 5.185, 47.243},
      {"191", 16.181, 4.801, 47.836},
      {"192", 0.095, 5.895, 47.246},
      {"193", 2.810, 6.172, 46.465},
      {"194", 3.971, 6.009, 42.194},
      {"195", 6.832, 5.997, 47.754},
      {"196", 8.122, 6.067, 51.352},
      {"197", 10.905, 6.094, 48.063},
      {"198", 11.960, 6.094, 45.712},
      {"199", 14.827, 5.905, 44.087},
      {"200", 15.952, 6.076, 46.440},
      {"201", -0.002, 6.976, 46.066},
      {"202", 1.080, 7.065, 43.037},
      {"203", 2.067, 6.948, 45.991},
      {"204", 4.108, 7.110, 46.039},
      {"205", 5.163, 6.975, 49.103},
      {"206", 7.096, 7.182, 40.404},
      {"207", 8.139, 7.080, 47.909},
      {"208", 8.817, 7.114, 47.783},
      {"209", 12.117, 7.114, 45.762},
      {"210", 12.854, 7.157, 44.330},
      {"211", 14.098, 6.804, 45.890},
      {"212", 14.875, 7.200, 45.738},
      {"213", 15.901, 7.009, 42.025},
      {"214", -0.129, 7.897, 48.120},
      {"215", 0.892, 7.873, 43.386},
      {"217", 2.067, 8.042, 41.969},
      {"218", 3.021, 8.000, 46.842},
      {"219", 3.852, 8.068, 47.155},
      {"220", 5.049, 8.167, 41.506},
      {"221", 6.196, 8.022, 49.278},
      {"222", 6.879, 8.139, 49.086},
      {"223", 7.989, 7.995, 42.547},
      {"224", 9.010, 8.186, 45.875},
      {"225", 10.184, 7.885, 44.787},
      {"226", 10.834, 7.990, 49.531},
      {"227", 12.069, 8.038, 43.913},
      {"228", 13.009, 7.924, 48.178},
      {"229", 13.832, 7.945, 42.677},
      {"230", 14.994, 8.059, 48.910},
      {"231", 16.043, 7.933, 40.837},
      {"232", 0.023, 8.897, 44.417},
      {"233", 0.983, 9.140, 49.538},
      {"234", 2.169, 9.176, 45.182},
      {"235", 3.922, 9.006, 45.372},
      {"236", 4.891, 8.892, 44.643},
      {"237", 6.086, 8.830, 44.778},
      {"240", 7.943, 8.848, 41.314},
      {"241", 8.873, 9.001, 47.707},
      {"242", 11.032, 8.903, 44.865},
      {"243", 12.147, 8.971, 41.742},
      {"244", 13.089, 9.009, 46.316},
      {"245", 14.157, 9.072, 48.460},
      {"246", 14.906, 8.848, 45.031},
      {"247", 16.055, 8.953, 45.176},
      {"248", -0.080, 9.876, 43.959},
      {"249", 2.847, 9.951, 46.358},
      {"250", 3.832, 10.197, 40.705},
      {"251", 6.972, 10.034, 45.058},
      {"252", 8.010, 9.897, 44.716},
      {"253", 11.191, 10.192, 44.378},
      {"254", 11.803, 9.853, 46.723},
      {"255", 12.972, 9.959, 45.418},
      {"256", 14.025, 10.043, 46.571},
      {"257", 15.014, 9.989, 43.681},
      {"258", 16.040, 10.059, 46.618},
      {"259", -0.047, 11.027, 45.537},
      {"260", 0.841, 11.198, 44.486},
      {"261", 1.983, 10.880, 44.390},
      {"262", 4.139, 11.134, 42.161},
      {"263", 5.115, 10.905, 45.966},
      {"264", 7.803, 10.932, 44.196},
      {"265", 9.120, 11.133, 47.806},
      {"266", 12.091, 10.908, 44.159},
      {"267", 12.978, 11.047, 44.942},
      {"268", 13.961, 10.873, 41.532},
      {"269", 15.053, 11.190, 47.439},
      {"270", 15.897, 11.074, 43.208},
      {"271", -0.174, 11.843, 46.254},
      {"272", 0.967, 11.890, 46.759},
      {"273", 2.091, 12.183, 47.170},
      {"274", 3.022, 12.025, 47.257},
      {"275", 4.005, 11.965, 43.477},
      {"276", 5.051, 12.040, 45.042},
      {"277", 5.961, 11.840, 41.404},
      {"278", 7.104, 11.863, 47.000},
      {"279", 8.133, 11.932, 43.894},
      {"280", 8.860, 12.166, 42.832},
      {"281", 10.157, 12.154, 44.336},
      {"282", 11.111, 11.812, 48.169},
      {"283", 11.989, 11.847, 45.622},
      {"284", 12.858, 12.085, 42.927},
      {"285", 14.180, 12.028, 45.962},
      {"286", 14.877, 11.870, 46.020},
      {"287", 16.182, 12.000, 44.782},
      },
      kFigure5Attribute);
}

// ---------------------------------------------------------------------------
// Village 27 (actual 26%) and its seven neighbors within radius 8.5. Nearest
// is 29 (inverse-distance weight ~0.41), farthest 42 (~0.05). The plain mean
// of the neighbors is 45 and the inverse-distance mean is 28.

inline constexpr double kVillage27Radius = 8.5;
inline const std::string kVillage27Attribute = "illit_f";

inline SpatialDataset village27() {
  return detail::points(
      {
      {"27", 3.500, 2.000, 26.0},
      {"29", 4.485, 2.174, 10.145049},
      {"31", 4.173, 4.511, 10.000000},
      {"25", 0.895, 4.185, 20.000000},
      {"33", -0.353, 0.598, 40.000000},
      {"40", 1.893, -2.417, 70.000000},
      {"36", 7.292, -2.520, 69.854951},
      {"42", 10.217, 6.703, 95.000000},
      },
      kVillage27Attribute);
}

// ---------------------------------------------------------------------------
// 3x3 grid of unit squares with ids r<row>c<col>; the center cell carries a
// high value.

inline const std::string kGridAttribute = "v";

inline SpatialDataset polygon_grid() {
  std::vector<PolygonSite> cells;
  const double values[3][3] = {{10.0, 11.0, 10.5}, {11.5, 25.0, 10.0}, {9.5, 10.5, 11.0}};
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      const double x = c, y = r;
      cells.push_back({SiteId("r" + std::to_string(r) + "c" + std::to_string(c)),
                       {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}},
                       {},
                       {{kGridAttribute, values[r][c]}}});
    }
  }
  return SpatialDataset::from_polygons(std::move(cells), {kGridAttribute});
}

} // namespace wsod::fixtures
