from setuptools import setup, find_packages

setup(
    name='lie-endo-toolbox',
    description='Exact computations with the canonical endomorphism field of a Lie algebra.',
    long_description=open('README.md').read().strip(),
    long_description_content_type="text/markdown",
    version='1.0.0',
    license='MIT',
    py_modules=['lie-endo-toolbox'],
    zip_safe=False,
    packages=find_packages(exclude=['spec', 'examples']),
    package_dir={'lie_endo_toolbox': 'lie_endo_toolbox'},
    python_requires='>=3.8',
    install_requires=[
        "sympy>=1.9",
        "numpy>=1.20",
        "XlsxWriter>=1.2.1",
        "openpyxl>=3.0.6"
    ],
    scripts=['bin/lie-endo-cli']
)
