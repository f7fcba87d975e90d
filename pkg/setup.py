"""Build the optional compiled row-reduction kernel.

The package is fully functional without the extension (a numpy fallback is
selected at import time); building it just makes the big row reductions faster.
If Cython or a C compiler is unavailable we print a notice and carry on.
"""

from setuptools import setup

ext_modules = []
try:
    import numpy
    from Cython.Build import cythonize
    from setuptools import Extension

    ext_modules = cythonize(
        [
            Extension(
                "engel_lab._rowred",
                ["src/engel_lab/_rowred.pyx"],
                include_dirs=[numpy.get_include()],
                extra_compile_args=["-O3"],
                define_macros=[("NPY_NO_DEPRECATED_API", "NPY_1_7_API_VERSION")],
            )
        ],
        language_level=3,
    )
except Exception as exc:  # pragma: no cover - exercised only on broken toolchains
    print(f"engel-lab: skipping compiled kernel ({exc!r}); pure fallback will be used")

setup(ext_modules=ext_modules)
