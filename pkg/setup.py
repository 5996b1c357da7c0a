from setuptools import Extension, setup
from Cython.Build import cythonize

ext = Extension("knotpoly._statesum", ["src/knotpoly/_statesum.pyx"])

setup(ext_modules=cythonize([ext], language_level=3))
