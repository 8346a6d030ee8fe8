from Cython.Build import cythonize
from setuptools import Extension, setup

setup(
    ext_modules=cythonize(
        [Extension("padic_dedekind._kernels._core", ["src/padic_dedekind/_kernels/_core.pyx"])],
        language_level=3,
    ),
)
