#include <stdlib.h> 
#include <stdio.h>
 
void main(){ 
    printf("bonjour\n"); 
    printf("\n") 
} 
