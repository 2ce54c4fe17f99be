"""Build the optional Cython kernels; the package runs without them."""
import os

from setuptools import setup

ext_modules = []
if not os.environ.get("JAVAMORPH_NO_EXT"):
    try:
        from Cython.Build import cythonize
        from setuptools import Extension

        ext_modules = cythonize(
            [Extension("javamorph.metrics._kernels", ["src/javamorph/metrics/_kernels.pyx"],
                       extra_compile_args=["-O3"])],
            compiler_directives={"language_level": "3"},
        )
    except ImportError:
        ext_modules = []

setup(ext_modules=ext_modules)
