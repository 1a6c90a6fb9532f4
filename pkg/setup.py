import os

from setuptools import Extension, setup

ext_modules = []
if not os.environ.get("IASELECT_SKIP_EXT"):
    from Cython.Build import cythonize

    ext_modules = cythonize(
        [
            Extension(
                "iaselect.query._kernel",
                ["src/iaselect/query/_kernel.pyx"],
                extra_compile_args=["-O3"],
            )
        ],
        compiler_directives={"language_level": "3"},
    )

setup(ext_modules=ext_modules)
