void both_halves(double *a, double *b, int n) {
    #pragma omp parallel sections
    {
        #pragma omp section
        {
            for (int i = 0; i < n; i++) a[i] += 1.0;
        }
        #pragma omp section
        {
            for (int i = 0; i < n; i++) b[i] += 1.0;
        }
    }
}
