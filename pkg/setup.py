import os

from setuptools import Extension, setup

# The compiled kernels are optional; without Cython the package installs
# pure-Python and selects the fallback at import time.
ext_modules = []
if os.environ.get("ZASTAVA_NO_EXT", "") in ("", "0"):
    try:
        from Cython.Build import cythonize
    except ImportError:
        pass
    else:
        ext_modules = cythonize(
            [Extension("zastava._speedups", ["src/zastava/_speedups.pyx"], extra_compile_args=["-O2"])],
            compiler_directives={"language_level": "3"},
        )

setup(ext_modules=ext_modules)
