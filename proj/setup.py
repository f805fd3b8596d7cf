import os

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup


def eigen_include():
    for cand in (
        os.environ.get("EIGEN3_INCLUDE_DIR", ""),
        "/usr/include/eigen3",
        "/usr/local/include/eigen3",
    ):
        if cand and os.path.isdir(cand):
            return cand
    raise RuntimeError("Eigen3 headers not found; set EIGEN3_INCLUDE_DIR")


ext = Pybind11Extension(
    "nhchain._nhchain",
    sources=[
        "bindings/pymodule.cpp",
        "src/model.cpp",
        "src/dense.cpp",
        "src/winding.cpp",
        "src/skin.cpp",
        "src/greens.cpp",
        "src/phase.cpp",
    ],
    include_dirs=["include", "vendor", eigen_include()],
    cxx_std=20,
)

setup(
    ext_modules=[ext],
    cmdclass={"build_ext": build_ext},
)
