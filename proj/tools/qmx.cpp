#include <cstdio>
int main(){ std::puts("qmx: placeholder"); return 0; }
