from setuptools import setup, find_packages

with open('README.md','r') as f:
    description = f.read()

setup(
	name='py-polariton',
	version='1.0.0',
    description='Ground-state phases of a coupled-cavity polariton chain with van der Waals repulsion',
	install_requires=['numpy','scipy'],
	extras_require={'test': ['pytest']},
	entry_points={'console_scripts': ['py-polariton=py_polariton.cli:main']},
    keywords=['polariton','jaynes-cummings-hubbard','rydberg','devils-staircase','phase-diagram'],
    license='MIT',
    long_description=description,
    long_description_content_type='text/markdown',
    packages=find_packages(exclude=['tests'])
)
