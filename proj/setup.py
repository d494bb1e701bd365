from pybind11.setup_helpers import Pybind11Extension, build_ext
from setuptools import setup

ext = Pybind11Extension(
    "triprimes",
    sources=[
        "src/numbers.cpp",
        "src/errors.cpp",
        "src/prime_engine.cpp",
        "src/inequality_scanner.cpp",
        "src/certificate_engine.cpp",
        "src/limit_explorer.cpp",
        "src/reporting.cpp",
        "python/module.cpp",
    ],
    include_dirs=["include", "vendor"],
    libraries=["gmpxx", "gmp", "mpfr"],
    cxx_std=20,
)

setup(ext_modules=[ext], cmdclass={"build_ext": build_ext})
