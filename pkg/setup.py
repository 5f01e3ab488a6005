import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("COPERM_SKIP_EXT"):
    try:
        from Cython.Build import cythonize

        ext_modules = cythonize(
            [Extension("coperm._core", ["src/coperm/_core.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        # no Cython: install the pure-Python fallback only
        pass

setup(ext_modules=ext_modules)
