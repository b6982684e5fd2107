/**
 * Minimal DOM construction helpers; no framework, just typed wrappers
 * around document.createElement.
 */

export type Child = Node | string;

export function el<K extends keyof HTMLElementTagNameMap>(
    tag: K,
    attrs: Record<string, string> = {},
    children: Child[] = [],
): HTMLElementTagNameMap[K] {
    const element = document.createElement(tag);
    for (const [key, value] of Object.entries(attrs)) {
        element.setAttribute(key, value);
    }
    for (const child of children) {
        element.append(child);
    }
    return element;
}

export function clear(element: Element): void {
    while (element.firstChild) {
        element.removeChild(element.firstChild);
    }
}

export function byId<T extends HTMLElement>(root: ParentNode, id: string): T {
    const found = root.querySelector(`#${id}`);
    if (!found) {
        throw new Error(`missing element #${id}`);
    }
    return found as T;
}
