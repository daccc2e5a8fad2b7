"""Setup toricbound package"""
from setuptools import setup, find_packages

setup(
    name='toricbound',
    version='0.1',
    keywords='toric gromov width seshadri lattice polytope',
    description='Exact combinatorial Gromov width and Seshadri bounds for smooth toric manifolds',
    license='Apache License 2.0',
    author='',
    author_email='',
    packages=find_packages(exclude=['tests', 'tests.*']),
    include_package_data=True,
    platforms='any',
    python_requires='>=3.8',
    install_requires=['argparse', 'sympy>=1.12', 'jsonpickle', 'texttable'],
    entry_points={'console_scripts': ['toricbound=toricbound.main:console_main']},
)
