from setuptools import Extension, setup

try:
    from Cython.Build import cythonize
except ImportError:
    # pure-Python fallback kernel is selected at import time
    ext_modules = []
else:
    ext_modules = cythonize(
        [
            Extension(
                "pentalab._kernel",
                ["src/pentalab/_kernel.pyx"],
                # -ffp-contract=off keeps the compiled kernel bit-identical
                # to the pure-Python twin (no FMA contraction)
                extra_compile_args=["-O3", "-ffp-contract=off"],
            )
        ],
        language_level=3,
    )

setup(ext_modules=ext_modules)
