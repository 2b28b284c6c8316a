"""Build hook for the optional compiled kernel module.

The package is pure Python; `zetaodd._speedups` is a Cython build of the
series-summation hot loops.  If Cython or a C compiler is unavailable the
install falls back to `zetaodd._purekernels` transparently.
"""

from setuptools import Extension, setup

try:
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "zetaodd._speedups",
                ["src/zetaodd/_speedups.pyx"],
                extra_compile_args=["-O2"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )
except ImportError:
    ext_modules = []

setup(ext_modules=ext_modules)
