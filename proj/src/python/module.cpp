#include <pybind11/pybind11.h>
PYBIND11_MODULE(phmf, m) { m.doc() = "placeholder"; }
