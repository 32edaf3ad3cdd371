"""Builds the C++ extension; everything declarative lives in pyproject.toml."""

from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

extension = Pybind11Extension(
    "goddard._core",
    sources=[
        "python/bindings.cpp",
        "src/rational.cpp",
        "src/series.cpp",
        "src/goddard_series.cpp",
        "src/numeric_eval.cpp",
    ],
    include_dirs=["include"],
    cxx_std=20,
)

setup(ext_modules=[extension], cmdclass={"build_ext": build_ext})
