import os

from setuptools import Extension, setup

# The compiled kernels are optional: without Cython (or a compiler) the
# package installs and runs on the pure-Python fallback.
ext_modules = []
if os.environ.get("VNUM_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        cythonize = None
    if cythonize is not None:
        ext_modules = cythonize(
            [Extension("vnum._speedups", ["src/vnum/_speedups.pyx"], extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
