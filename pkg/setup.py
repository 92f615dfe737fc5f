from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
    ext_modules = cythonize(
        [Extension("qaffine._kernels", ["src/qaffine/_kernels.pyx"],
                   extra_compile_args=["-O2"])],
        language_level=3,
    )
except ImportError:
    # pure-Python fallback is selected at import time
    ext_modules = []

setup(ext_modules=ext_modules)
